//! Finite groups as multiplication tables, crossed modules of groups and
//! their braidings. Everything here is decided by exhaustive sweeps.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::report::{find_witness_by, Axiom, ValidationReport};

/// A group law on `0..order`, with element names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses exhaustively.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        let bad = |m: String| Err(Error::InvalidGroup(m));
        if n == 0 {
            return bad("empty table".into());
        }
        if names.len() != n {
            return bad(format!("{} names for {n} rows", names.len()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|x| !seen.insert(x.as_str())) {
            return bad(format!("duplicate element `{dup}`"));
        }
        if let Some((i, _)) = table.iter().enumerate().find(|(_, r)| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad(format!("row {} is not a row of indices below {n}", names[i]));
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) else {
            return bad("no identity element".into());
        };
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&y| table[x][y] == identity && table[y][x] == identity) {
                Some(y) => inverse.push(y),
                None => return bad(format!("`{}` has no inverse", names[x])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({}, {}, {})", names[a], names[b], names[c]));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity, inverse })
    }

    /// The group generated by closing `generators` under `mul`. The identity
    /// is listed first and named `e`; other elements are `g1, g2, ...` in
    /// order of discovery.
    pub fn from_closure<T: Clone + Eq + Hash>(
        identity: T,
        generators: &[T],
        mul: impl Fn(&T, &T) -> T,
    ) -> Result<FiniteGroup> {
        let mut elems = vec![identity];
        let mut index: HashMap<T, usize> = HashMap::from([(elems[0].clone(), 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in generators {
                let p = mul(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let table = elems.iter().map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect()).collect();
        let names = (0..elems.len()).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect();
        FiniteGroup::from_table(names, table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `a b a⁻¹`
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_closure(0usize, &[1 % n.max(1)], |a, b| (a + b) % n.max(1)).expect("cyclic group")
}

/// Symmetries of the regular `n`-gon, order `2n`. Elements `(k, f)` mean
/// rotation by `k` after `f` reflections.
pub fn dihedral(n: usize) -> FiniteGroup {
    let mul = |a: &(usize, bool), b: &(usize, bool)| {
        let k = if a.1 { (a.0 + n - b.0) % n } else { (a.0 + b.0) % n };
        (k, a.1 ^ b.1)
    };
    FiniteGroup::from_closure((0, false), &[(1 % n, false), (0, true)], mul).expect("dihedral group")
}

fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

pub fn symmetric3() -> FiniteGroup {
    FiniteGroup::from_closure(vec![0, 1, 2], &[vec![1, 0, 2], vec![1, 2, 0]], |a: &Vec<usize>, b: &Vec<usize>| {
        compose_perm(a, b)
    })
    .expect("S3")
}

/// Even permutations of four points.
pub fn alternating4() -> FiniteGroup {
    FiniteGroup::from_closure(
        vec![0, 1, 2, 3],
        &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
        |a: &Vec<usize>, b: &Vec<usize>| compose_perm(a, b),
    )
    .expect("A4")
}

/// Unit quaternions `±1, ±i, ±j, ±k` as (sign, unit) with unit 0..4 = 1, i, j, k.
pub fn quaternion8() -> FiniteGroup {
    let mul = |a: &(bool, usize), b: &(bool, usize)| {
        // unit products: table[x][y] = (negated, unit)
        const T: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let (neg, u) = T[a.1][b.1];
        (a.0 ^ b.0 ^ neg, u)
    };
    FiniteGroup::from_closure((false, 0), &[(false, 1), (false, 2)], mul).expect("Q8")
}

/// `C₃ ⋊ C₄` with the generator of `C₄` inverting `C₃`, order 12.
pub fn dicyclic3() -> FiniteGroup {
    let mul = |a: &(usize, usize), b: &(usize, usize)| {
        let twisted = if a.1.is_multiple_of(2) { b.0 } else { (3 - b.0) % 3 };
        ((a.0 + twisted) % 3, (a.1 + b.1) % 4)
    };
    FiniteGroup::from_closure((0, 0), &[(1, 0), (0, 1)], mul).expect("Dic3")
}

pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let gens: Vec<(usize, usize)> =
        (0..g.order()).map(|a| (a, h.identity())).chain((0..h.order()).map(|b| (g.identity(), b))).collect();
    FiniteGroup::from_closure((g.identity(), h.identity()), &gens, |a, b| (g.mul(a.0, b.0), h.mul(a.1, b.1)))
        .expect("direct product")
}

/// Every fixture group, all of order at most 12.
pub const GROUP_NAMES: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "V4", "S3", "D4", "D5", "D6", "Q8",
    "C2xC4", "C2xC6", "C2xC2xC2", "C3xC3", "A4", "Dic3",
];

pub fn group_fixture(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownFixture(name.to_string());
    if let Some(parts) = name.split_once('x') {
        let (a, b) = parts;
        return Ok(product(&group_fixture(a)?, &group_fixture(b)?));
    }
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1);
    match name {
        "V4" => Ok(product(&cyclic(2), &cyclic(2))),
        "S3" => Ok(symmetric3()),
        "Q8" => Ok(quaternion8()),
        "A4" => Ok(alternating4()),
        "Dic3" => Ok(dicyclic3()),
        _ if name.starts_with('C') => num(&name[1..]).map(cyclic).ok_or_else(unknown),
        _ if name.starts_with('D') => num(&name[1..]).filter(|&n| n >= 3).map(dihedral).ok_or_else(unknown),
        _ => Err(unknown()),
    }
}

/// `(G, H, ·, ∂)` with an optional braiding `{-,-}: H × H → G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupXMod {
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    /// `action[h][g] = h·g`
    pub action: Vec<Vec<usize>>,
    pub boundary: Vec<usize>,
    pub brace: Option<Vec<Vec<usize>>>,
}

impl GroupXMod {
    /// Checks only that the tables have the right shape and entries in range.
    pub fn new(
        g: FiniteGroup,
        h: FiniteGroup,
        action: Vec<Vec<usize>>,
        boundary: Vec<usize>,
        brace: Option<Vec<Vec<usize>>>,
    ) -> Result<GroupXMod> {
        let (ng, nh) = (g.order(), h.order());
        let grid = |t: &Vec<Vec<usize>>, rows: usize, cols: usize, bound: usize| {
            t.len() == rows && t.iter().all(|r| r.len() == cols && r.iter().all(|&x| x < bound))
        };
        if !grid(&action, nh, ng, ng) {
            return Err(Error::InvalidGroup("action table must be |H| × |G| with entries in G".into()));
        }
        if boundary.len() != ng || boundary.iter().any(|&x| x >= nh) {
            return Err(Error::InvalidGroup("boundary must map every element of G into H".into()));
        }
        if let Some(b) = &brace {
            if !grid(b, nh, nh, ng) {
                return Err(Error::InvalidGroup("braiding table must be |H| × |H| with entries in G".into()));
            }
        }
        Ok(GroupXMod { g, h, action, boundary, brace })
    }

    pub fn act(&self, h: usize, g: usize) -> usize {
        self.action[h][g]
    }

    pub fn d(&self, g: usize) -> usize {
        self.boundary[g]
    }
}

/// `(G, G, Conj, Id_G, [-,-])`.
pub fn conjugation_example(g: &FiniteGroup) -> GroupXMod {
    let n = g.order();
    let action = (0..n).map(|h| (0..n).map(|x| g.conj(h, x)).collect()).collect();
    let brace = (0..n).map(|h| (0..n).map(|k| g.commutator(h, k)).collect()).collect();
    GroupXMod::new(g.clone(), g.clone(), action, (0..n).collect(), Some(brace)).expect("well-shaped tables")
}

/// Action by automorphisms, `∂` a homomorphism, XGr1 and XGr2.
pub fn validate_group_xmod(x: &GroupXMod) -> ValidationReport {
    let (g, h) = (&x.g, &x.h);
    let (ng, nh) = (g.order(), h.order());
    let gn = |a: usize| g.name(a).to_string();
    let hn = |a: usize| h.name(a).to_string();
    let mut r = ValidationReport::new("groupxmod");
    // h·(gg') = (h·g)(h·g'),  (hh')·g = h·(h'·g),  1·g = g
    let w = find_witness_by(&[nh, ng, ng], |t| {
        (gn(x.act(t[0], g.mul(t[1], t[2]))), gn(g.mul(x.act(t[0], t[1]), x.act(t[0], t[2]))))
    })
    .or_else(|| {
        find_witness_by(&[nh, nh, ng], |t| (gn(x.act(h.mul(t[0], t[1]), t[2])), gn(x.act(t[0], x.act(t[1], t[2])))))
    })
    .or_else(|| find_witness_by(&[ng], |t| (gn(x.act(h.identity(), t[0])), gn(t[0]))));
    r.record(Axiom::XGrAct, w);
    r.record(
        Axiom::XGrHom,
        find_witness_by(&[ng, ng], |t| (hn(x.d(g.mul(t[0], t[1]))), hn(h.mul(x.d(t[0]), x.d(t[1]))))),
    );
    // ∂(h·g) = h ∂(g) h⁻¹
    r.record(Axiom::XGr1, find_witness_by(&[nh, ng], |t| (hn(x.d(x.act(t[0], t[1]))), hn(h.conj(t[0], x.d(t[1]))))));
    // ∂(g)·g' = g g' g⁻¹
    r.record(Axiom::XGr2, find_witness_by(&[ng, ng], |t| (gn(x.act(x.d(t[0]), t[1])), gn(g.conj(t[0], t[1])))));
    r
}

/// BGr1–BGr6. Fails with a structural error if there is no braiding table.
pub fn validate_group_braiding(x: &GroupXMod) -> Result<ValidationReport> {
    let br = x.brace.as_ref().ok_or_else(|| Error::InvalidGroup("no braiding table".into()))?;
    let b = |p: usize, q: usize| br[p][q];
    let (g, h) = (&x.g, &x.h);
    let (ng, nh) = (g.order(), h.order());
    let gn = |a: usize| g.name(a).to_string();
    let hn = |a: usize| h.name(a).to_string();
    let mut r = ValidationReport::new("groupxmod");
    // ∂{h,h'} = [h,h']
    r.record(Axiom::BGr1, find_witness_by(&[nh, nh], |t| (hn(x.d(b(t[0], t[1]))), hn(h.commutator(t[0], t[1])))));
    // {∂g,∂g'} = [g,g']
    r.record(Axiom::BGr2, find_witness_by(&[ng, ng], |t| (gn(b(x.d(t[0]), x.d(t[1]))), gn(g.commutator(t[0], t[1])))));
    // {∂g,h} = g (h·g⁻¹)
    r.record(
        Axiom::BGr3,
        find_witness_by(&[ng, nh], |t| (gn(b(x.d(t[0]), t[1])), gn(g.mul(t[0], x.act(t[1], g.inv(t[0])))))),
    );
    // {h,∂g} = (h·g) g⁻¹
    r.record(
        Axiom::BGr4,
        find_witness_by(&[nh, ng], |t| (gn(b(t[0], x.d(t[1]))), gn(g.mul(x.act(t[0], t[1]), g.inv(t[1]))))),
    );
    // {h,h'h''} = {h,h'} (h'·{h,h''})
    r.record(
        Axiom::BGr5,
        find_witness_by(&[nh, nh, nh], |t| {
            (gn(b(t[0], h.mul(t[1], t[2]))), gn(g.mul(b(t[0], t[1]), x.act(t[1], b(t[0], t[2])))))
        }),
    );
    // {hh',h''} = (h·{h',h''}) {h,h''}
    r.record(
        Axiom::BGr6,
        find_witness_by(&[nh, nh, nh], |t| {
            (gn(b(h.mul(t[0], t[1]), t[2])), gn(g.mul(x.act(t[0], b(t[1], t[2])), b(t[0], t[2]))))
        }),
    );
    Ok(r)
}
