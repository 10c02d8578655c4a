//! Mutation search: bump one coefficient (or one table entry) of a valid
//! structure and look at the first failing entry of its report.

#![allow(dead_code)]

use std::collections::BTreeMap;

use peiffer::action::{assoc_action_report, lie_action_report, AssocAction, LieAction};
use peiffer::braid::functors::{
    beta_iso, braided_morphism_report_assoc, braided_morphism_report_lie, cat_functor_report, CatFunctor,
};
use peiffer::braid::{
    braided_cat_report, braided_xmod_assoc_report, braided_xmod_lie_report, check_anticoherence,
    validate_braiding_cat_lie_alt, CatBraiding, LieVariant, XBraidingAssoc, XBraidingLie,
};
use peiffer::groupx::{validate_group_braiding, validate_group_xmod, GroupXMod};
use peiffer::icat::{cat_algebra_report, CatAlgebra};
use peiffer::natensor::{antisymmetry_consequence, pure_bracket_report, tensor_square, TensorSquare};
use peiffer::report::Entry;
use peiffer::xmod::{xmod_assoc_report, xmod_lie_report, XModAssoc, XModLie, XModMorphism};
use peiffer::Status;
use peiffer::{Algebra, Axiom, BilMap, Flavor, LinMap, Space, ValidationReport, Vector};

use Axiom::*;

pub const FLAVOR: &[Axiom] = &[Assoc, LieAlt, Jacobi];
pub const ASSOC_ACTION: &[Axiom] = &[AAs1, AAs2, AAs3, AAs4, AAs5, AAs6];
pub const LIE_ACTION: &[Axiom] = &[ALie1, ALie2];
pub const XMOD_ASSOC: &[Axiom] = &[Hom, XAs1, XAs2];
pub const XMOD_LIE: &[Axiom] = &[Hom, XLie1, XLie2];
pub const MORPHISM: &[Axiom] = &[Hom, XAssH1, XAssH2, XLieH1, XLieH2, BXH, Iso];
pub const BRAID_ASSOC: &[Axiom] = &[BAs1, BAs2, BAs3, BAs4, BAs5, BAs6];
pub const BRAID_LIE: &[Axiom] = &[BLie1, BLie2, BLie3, BLie4, BLie5, BLie6];
pub const CAT: &[Axiom] = &[Hom, CatSE, CatTE, CatComp, CatSrcTgt, CatUnit, CatAssoc, CatKer];
pub const CAT_BRAID: &[Axiom] = &[AsT1, AsT2, AsT3, AsT4, LieT1, LieT2, LieT3, LieT4, LieB3, LieB4];
pub const ANTI: &[Axiom] = &[LieT1, LieT2, AntiLeft, AntiRight, AntiSym];
pub const FUNCTOR: &[Axiom] = &[Hom, FunS, FunT, FunE, BIFun, Iso];
pub const TENSOR: &[Axiom] = &[RTLie3, RTLie4];
pub const GROUP_XMOD: &[Axiom] = &[XGrAct, XGrHom, XGr1, XGr2];
pub const GROUP_BRAID: &[Axiom] = &[BGr1, BGr2, BGr3, BGr4, BGr5, BGr6];

#[derive(Clone, Debug)]
pub enum Part {
    Lin(LinMap),
    Bil(BilMap),
    /// A table of indices `< modulus`.
    Table(Vec<Vec<usize>>, usize),
}

impl Part {
    pub fn len(&self) -> usize {
        match self {
            Part::Lin(f) => f.domain().dim() * f.codomain().dim(),
            Part::Bil(b) => b.left().dim() * b.right().dim() * b.codomain().dim(),
            Part::Table(t, _) => t.iter().map(Vec::len).sum(),
        }
    }

    /// Add one to coefficient `idx` (tables: step the entry cyclically).
    pub fn bumped(&self, idx: usize) -> Part {
        fn bump(v: &mut Vector, k: usize) {
            let one = v.0[k].field().one();
            v.0[k] = &v.0[k] + &one;
        }
        match self {
            Part::Lin(f) => {
                let d = f.codomain().dim();
                let mut cols = f.columns().to_vec();
                bump(&mut cols[idx / d], idx % d);
                Part::Lin(LinMap::from_columns(f.domain().clone(), f.codomain().clone(), cols).unwrap())
            }
            Part::Bil(b) => {
                let d = b.codomain().dim();
                let mut images = b.images().to_vec();
                bump(&mut images[idx / d], idx % d);
                Part::Bil(
                    BilMap::from_images(b.left().clone(), b.right().clone(), b.codomain().clone(), images).unwrap(),
                )
            }
            Part::Table(t, m) => {
                let mut t = t.clone();
                let w = t[0].len();
                let cell = &mut t[idx / w][idx % w];
                *cell = (*cell + 1) % m;
                Part::Table(t, *m)
            }
        }
    }

    /// Human-readable position of coefficient `idx`.
    pub fn locate(&self, idx: usize) -> String {
        match self {
            Part::Lin(f) => {
                let d = f.codomain().dim();
                format!("entry ({}, {})", idx % d, idx / d)
            }
            Part::Bil(b) => {
                let d = b.codomain().dim();
                let (ij, k) = (idx / d, idx % d);
                format!("coefficient {} of image ({}, {})", k, ij / b.right().dim(), ij % b.right().dim())
            }
            Part::Table(t, _) => format!("cell ({}, {})", idx / t[0].len(), idx % t[0].len()),
        }
    }

    pub fn lin(&self) -> &LinMap {
        match self {
            Part::Lin(f) => f,
            _ => panic!("not a linear map"),
        }
    }

    pub fn bil(&self) -> &BilMap {
        match self {
            Part::Bil(b) => b,
            _ => panic!("not a bilinear map"),
        }
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        match self {
            Part::Table(t, _) => t,
            _ => panic!("not a table"),
        }
    }
}

type Build = Box<dyn Fn(&[Part]) -> Option<ValidationReport>>;

pub struct Seed {
    pub name: String,
    /// False for hand-made structures that are already broken.
    pub valid: bool,
    /// Tags checked by the validator under test; every other entry of the
    /// report is a structural prerequisite.
    pub own: &'static [Axiom],
    pub parts: Vec<(&'static str, Part)>,
    build: Build,
}

impl Seed {
    pub fn new(name: impl Into<String>, own: &'static [Axiom], parts: Vec<(&'static str, Part)>, build: Build) -> Seed {
        Seed { name: name.into(), valid: true, own, parts, build }
    }

    pub fn broken(mut self) -> Seed {
        self.valid = false;
        self
    }

    pub fn report(&self, parts: &[Part]) -> Option<ValidationReport> {
        (self.build)(parts)
    }

    pub fn base_report(&self) -> ValidationReport {
        let parts: Vec<Part> = self.parts.iter().map(|(_, p)| p.clone()).collect();
        self.report(&parts).unwrap_or_else(|| panic!("{}: unmutated structure does not build", self.name))
    }
}

/// How cleanly a mutant isolates its tag, best first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    /// The only failing entry.
    Sole,
    /// Every earlier entry passes.
    First,
    /// Prerequisites pass; other tags of the same validator fail too.
    Shared,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Sole => "sole failure",
            Level::First => "first failure",
            Level::Shared => "shared failure",
        }
    }
}

/// A mutated structure whose prerequisites pass and whose report fails `tag`.
#[derive(Clone, Debug)]
pub struct Mutant {
    pub tag: Axiom,
    pub level: Level,
    pub description: String,
    pub report: ValidationReport,
}

impl Mutant {
    pub fn entry(&self) -> &Entry {
        self.report
            .entries
            .iter()
            .find(|e| e.tag == self.tag && e.status == Status::Fail)
            .expect("mutant fails its tag")
    }

    pub fn also_failing(&self) -> Vec<Axiom> {
        self.report.failing().into_iter().filter(|t| *t != self.tag).collect()
    }
}

/// Failing tags of `r` whose witness sides differ, with their level, if
/// every entry outside `own` passes.
pub fn classify(r: &ValidationReport, own: &[Axiom]) -> Vec<(Axiom, Level)> {
    if r.entries.iter().any(|e| !own.contains(&e.tag) && e.status == Status::Fail) {
        return Vec::new();
    }
    let fails: Vec<usize> = (0..r.entries.len()).filter(|&i| r.entries[i].status == Status::Fail).collect();
    let mut out = Vec::new();
    for &i in &fails {
        let e = &r.entries[i];
        if !e.witness.as_ref().is_some_and(|w| w.lhs != w.rhs) || out.iter().any(|(t, _)| *t == e.tag) {
            continue;
        }
        let level = if fails.len() == 1 {
            Level::Sole
        } else if i == fails[0] {
            Level::First
        } else {
            Level::Shared
        };
        out.push((e.tag, level));
    }
    out
}

/// Best mutant per tag over every seed and every single mutation.
pub fn search(seeds: &[Seed]) -> BTreeMap<Axiom, Mutant> {
    let mut found: BTreeMap<Axiom, Mutant> = BTreeMap::new();
    let note =
        |found: &mut BTreeMap<Axiom, Mutant>, r: &ValidationReport, own: &[Axiom], description: &dyn Fn() -> String| {
            for (tag, level) in classify(r, own) {
                if found.get(&tag).is_none_or(|m| level < m.level) {
                    found.insert(tag, Mutant { tag, level, description: description(), report: r.clone() });
                }
            }
        };
    for seed in seeds {
        let base = seed.base_report();
        if !seed.valid {
            note(&mut found, &base, seed.own, &|| format!("{} (as given)", seed.name));
            continue;
        }
        if seed.own.iter().all(|t| found.get(t).is_some_and(|m| m.level == Level::Sole)) {
            continue;
        }
        let parts: Vec<Part> = seed.parts.iter().map(|(_, p)| p.clone()).collect();
        for (k, (label, part)) in seed.parts.iter().enumerate() {
            for idx in 0..part.len() {
                let mut mutated = parts.clone();
                mutated[k] = part.bumped(idx);
                if let Some(r) = seed.report(&mutated) {
                    note(&mut found, &r, seed.own, &|| format!("{}: {} {} bumped", seed.name, label, part.locate(idx)));
                }
            }
        }
    }
    found
}

fn alg(space: &Space, p: &Part) -> Option<Algebra> {
    Algebra::new(space.clone(), p.bil().clone()).ok()
}

pub fn algebra_seed(name: &str, a: &Algebra, flavor: Flavor) -> Seed {
    let space = a.space().clone();
    Seed::new(
        name,
        FLAVOR,
        vec![("product", Part::Bil(a.mult().clone()))],
        Box::new(move |p| Some(alg(&space, &p[0])?.flavor_report("A", flavor))),
    )
}

fn assoc_action_parts(a: &AssocAction) -> Vec<(&'static str, Part)> {
    vec![
        ("actor product", Part::Bil(a.actor().mult().clone())),
        ("module product", Part::Bil(a.module().mult().clone())),
        ("left action", Part::Bil(a.left().clone())),
        ("right action", Part::Bil(a.right().clone())),
    ]
}

fn assoc_action_from(a: &AssocAction, p: &[Part]) -> Option<AssocAction> {
    let actor = alg(a.actor().space(), &p[0])?;
    let module = alg(a.module().space(), &p[1])?;
    AssocAction::from_parts(actor, module, p[2].bil().clone(), p[3].bil().clone()).ok()
}

fn lie_action_parts(a: &LieAction) -> Vec<(&'static str, Part)> {
    vec![
        ("actor bracket", Part::Bil(a.actor().mult().clone())),
        ("module bracket", Part::Bil(a.module().mult().clone())),
        ("action", Part::Bil(a.dot().clone())),
    ]
}

fn lie_action_from(a: &LieAction, p: &[Part]) -> Option<LieAction> {
    let actor = alg(a.actor().space(), &p[0])?;
    let module = alg(a.module().space(), &p[1])?;
    LieAction::from_parts(actor, module, p[2].bil().clone()).ok()
}

pub fn assoc_action_seed(name: &str, a: &AssocAction) -> Seed {
    let a2 = a.clone();
    Seed::new(
        name,
        ASSOC_ACTION,
        assoc_action_parts(a),
        Box::new(move |p| Some(assoc_action_report(&assoc_action_from(&a2, p)?, "act"))),
    )
}

pub fn lie_action_seed(name: &str, a: &LieAction) -> Seed {
    let a2 = a.clone();
    Seed::new(
        name,
        LIE_ACTION,
        lie_action_parts(a),
        Box::new(move |p| Some(lie_action_report(&lie_action_from(&a2, p)?, "act"))),
    )
}

fn xmod_assoc_from(x: &XModAssoc, p: &[Part]) -> Option<XModAssoc> {
    XModAssoc::from_parts(assoc_action_from(x.action(), p)?, p[4].lin().clone()).ok()
}

fn xmod_lie_from(x: &XModLie, p: &[Part]) -> Option<XModLie> {
    XModLie::from_parts(lie_action_from(x.action(), p)?, p[3].lin().clone()).ok()
}

pub fn xmod_assoc_seed(name: &str, x: &XModAssoc) -> Seed {
    let mut parts = assoc_action_parts(x.action());
    parts.push(("boundary", Part::Lin(x.boundary().clone())));
    let x2 = x.clone();
    Seed::new(name, XMOD_ASSOC, parts, Box::new(move |p| Some(xmod_assoc_report(&xmod_assoc_from(&x2, p)?, "X"))))
}

pub fn xmod_lie_seed(name: &str, x: &XModLie) -> Seed {
    let mut parts = lie_action_parts(x.action());
    parts.push(("boundary", Part::Lin(x.boundary().clone())));
    let x2 = x.clone();
    Seed::new(name, XMOD_LIE, parts, Box::new(move |p| Some(xmod_lie_report(&xmod_lie_from(&x2, p)?, "X"))))
}

pub fn braided_assoc_seed(name: &str, b: &XBraidingAssoc) -> Seed {
    let mut parts = assoc_action_parts(b.base().action());
    parts.push(("boundary", Part::Lin(b.base().boundary().clone())));
    parts.push(("braiding", Part::Bil(b.brace().clone())));
    let x = b.base().clone();
    Seed::new(
        name,
        BRAID_ASSOC,
        parts,
        Box::new(move |p| {
            let b = XBraidingAssoc::from_parts(xmod_assoc_from(&x, p)?, p[5].bil().clone()).ok()?;
            Some(braided_xmod_assoc_report(&b, "B"))
        }),
    )
}

pub fn braided_lie_seed(name: &str, b: &XBraidingLie) -> Seed {
    let mut parts = lie_action_parts(b.base().action());
    parts.push(("boundary", Part::Lin(b.base().boundary().clone())));
    parts.push(("braiding", Part::Bil(b.brace().clone())));
    let x = b.base().clone();
    Seed::new(
        name,
        BRAID_LIE,
        parts,
        Box::new(move |p| {
            let b = XBraidingLie::from_parts(xmod_lie_from(&x, p)?, p[4].bil().clone()).ok()?;
            Some(braided_xmod_lie_report(&b, "B"))
        }),
    )
}

pub fn identity_morphism(m: &Algebra, n: &Algebra) -> XModMorphism {
    XModMorphism { f1: LinMap::identity(m.space()), f2: LinMap::identity(n.space()) }
}

fn morphism_parts(phi: &XModMorphism) -> Vec<(&'static str, Part)> {
    vec![("f1", Part::Lin(phi.f1.clone())), ("f2", Part::Lin(phi.f2.clone()))]
}

/// `phi` from `b` into a copy of `b` whose braiding is mutable.
pub fn braided_morphism_assoc_seed(name: &str, b: &XBraidingAssoc, phi: &XModMorphism) -> Seed {
    let mut parts = morphism_parts(phi);
    parts.push(("target braiding", Part::Bil(b.brace().clone())));
    let b2 = b.clone();
    Seed::new(
        name,
        MORPHISM,
        parts,
        Box::new(move |p| {
            let phi = XModMorphism { f1: p[0].lin().clone(), f2: p[1].lin().clone() };
            let tgt = XBraidingAssoc::from_parts(b2.base().clone(), p[2].bil().clone()).ok()?;
            braided_morphism_report_assoc(&phi, &b2, &tgt).ok()
        }),
    )
}

pub fn braided_morphism_lie_seed(name: &str, b: &XBraidingLie, phi: &XModMorphism) -> Seed {
    let mut parts = morphism_parts(phi);
    parts.push(("target braiding", Part::Bil(b.brace().clone())));
    let b2 = b.clone();
    Seed::new(
        name,
        MORPHISM,
        parts,
        Box::new(move |p| {
            let phi = XModMorphism { f1: p[0].lin().clone(), f2: p[1].lin().clone() };
            let tgt = XBraidingLie::from_parts(b2.base().clone(), p[2].bil().clone()).ok()?;
            braided_morphism_report_lie(&phi, &b2, &tgt).ok()
        }),
    )
}

fn cat_parts(c: &CatAlgebra) -> Vec<(&'static str, Part)> {
    vec![
        ("C1 product", Part::Bil(c.c1().mult().clone())),
        ("C0 product", Part::Bil(c.c0().mult().clone())),
        ("s", Part::Lin(c.s().clone())),
        ("t", Part::Lin(c.t().clone())),
        ("e", Part::Lin(c.e().clone())),
    ]
}

fn cat_from(c: &CatAlgebra, p: &[Part]) -> Option<CatAlgebra> {
    let c1 = alg(c.c1().space(), &p[0])?;
    let c0 = alg(c.c0().space(), &p[1])?;
    CatAlgebra::from_parts(c1, c0, p[2].lin().clone(), p[3].lin().clone(), p[4].lin().clone(), c.flavor()).ok()
}

pub fn cat_seed(name: &str, c: &CatAlgebra) -> Seed {
    let c2 = c.clone();
    Seed::new(name, CAT, cat_parts(c), Box::new(move |p| Some(cat_algebra_report(&cat_from(&c2, p)?, "C"))))
}

fn cat_braiding_from(b: &CatBraiding, p: &[Part]) -> Option<CatBraiding> {
    CatBraiding::from_parts(cat_from(b.base(), p)?, p[5].bil().clone()).ok()
}

fn cat_braiding_parts(b: &CatBraiding) -> Vec<(&'static str, Part)> {
    let mut parts = cat_parts(b.base());
    parts.push(("tau", Part::Bil(b.tau().clone())));
    parts
}

pub fn cat_braiding_seed(name: &str, b: &CatBraiding, variant: LieVariant) -> Seed {
    let b2 = b.clone();
    Seed::new(
        name,
        CAT_BRAID,
        cat_braiding_parts(b),
        Box::new(move |p| Some(braided_cat_report(&cat_braiding_from(&b2, p)?, "T", variant))),
    )
}

/// Category laws, LieT1–2, then the three anticoherence identities.
pub fn anticoherence_seed(name: &str, b: &CatBraiding) -> Seed {
    let b2 = b.clone();
    Seed::new(
        name,
        ANTI,
        cat_braiding_parts(b),
        Box::new(move |p| {
            let b = cat_braiding_from(&b2, p)?;
            let mut r = cat_algebra_report(b.base(), "T");
            let mut lie = validate_braiding_cat_lie_alt(&b);
            lie.entries.retain(|e| matches!(e.tag, Axiom::LieT1 | Axiom::LieT2));
            r.extend(lie);
            r.extend(check_anticoherence(&b).ok()?);
            Some(r)
        }),
    )
}

/// `β` of `b` into `C(X(b))`.
pub fn beta_seed(name: &str, b: &CatBraiding) -> Seed {
    let eq = beta_iso(b).expect("beta");
    functor_seed(name, b, &eq.target, &eq.morphism)
}

/// A functor `f` from `src` to `tgt`, with mutable components.
pub fn functor_seed(name: &str, src: &CatBraiding, tgt: &CatBraiding, f: &CatFunctor) -> Seed {
    let parts = vec![("F1", Part::Lin(f.f1.clone())), ("F0", Part::Lin(f.f0.clone()))];
    let (src, tgt) = (src.clone(), tgt.clone());
    Seed::new(
        name,
        FUNCTOR,
        parts,
        Box::new(move |p| {
            let f = CatFunctor { f1: p[0].lin().clone(), f0: p[1].lin().clone() };
            cat_functor_report(&f, &src, &tgt).ok()
        }),
    )
}

fn tensor_report(ts: &TensorSquare) -> ValidationReport {
    let mut r = antisymmetry_consequence(ts);
    r.extend(pure_bracket_report(ts));
    r
}

/// Tensor square of `m` with a mutable bracket on the quotient.
pub fn tensor_seed(name: &str, m: &Algebra) -> Seed {
    let ts = tensor_square(m).expect("tensor square");
    let (m2, rel, space) = (m.clone(), ts.relations().clone(), ts.carrier().space().clone());
    Seed::new(
        name,
        TENSOR,
        vec![("carrier bracket", Part::Bil(ts.carrier().mult().clone()))],
        Box::new(move |p| {
            Some(tensor_report(&TensorSquare::from_parts(m2.clone(), rel.clone(), alg(&space, &p[0])?).ok()?))
        }),
    )
}

/// `M ⊗_K M` with no relations imposed and the zero bracket.
pub fn unreduced_tensor_seed(name: &str, m: &Algebra) -> Seed {
    let ts = tensor_square(m).expect("tensor square");
    let space = ts.tensor_space().clone();
    let zero = peiffer::linspace::Subspace::zero(&space);
    let m2 = m.clone();
    Seed::new(
        name,
        TENSOR,
        vec![("carrier bracket", Part::Bil(Algebra::abelian(space.clone()).mult().clone()))],
        Box::new(move |p| {
            Some(tensor_report(&TensorSquare::from_parts(m2.clone(), zero.clone(), alg(&space, &p[0])?).ok()?))
        }),
    )
    .broken()
}

/// Crossed-module laws, then the braiding laws when a table is present.
pub fn group_seed(name: &str, x: &GroupXMod) -> Seed {
    let (ng, nh) = (x.g.order(), x.h.order());
    let mut parts =
        vec![("action", Part::Table(x.action.clone(), ng)), ("boundary", Part::Table(vec![x.boundary.clone()], nh))];
    if let Some(b) = &x.brace {
        parts.push(("braiding", Part::Table(b.clone(), ng)));
    }
    let x2 = x.clone();
    Seed::new(
        name,
        if x.brace.is_some() { GROUP_BRAID } else { GROUP_XMOD },
        parts,
        Box::new(move |p| {
            let brace = p.get(2).map(|b| b.table().clone());
            let y = GroupXMod::new(x2.g.clone(), x2.h.clone(), p[0].table().clone(), p[1].table()[0].clone(), brace)
                .ok()?;
            let mut r = validate_group_xmod(&y);
            if y.brace.is_some() {
                r.extend(validate_group_braiding(&y).ok()?);
            }
            Some(r)
        }),
    )
}
