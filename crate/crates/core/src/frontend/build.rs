//! Resolution of a parsed document into core objects.
//!
//! Objects are assembled with the shape-checking constructors only; whether
//! they satisfy their axioms is a question for `validate`, so an invalid
//! crossed module is still a buildable declaration.

use std::collections::{HashMap, HashSet};

use super::ast::*;
use super::{FrontendError, Pos};
use crate::action::{induced_lie_action, AssocAction, LieAction};
use crate::algebra::{Algebra, Flavor};
use crate::braid::{bracket_braiding, commutator_braiding, CatBraiding, LieVariant, XBraidingAssoc, XBraidingLie};
use crate::catalog::fixture;
use crate::field::Field;
use crate::groupx::{conjugation_example, group_fixture, FiniteGroup, GroupXMod};
use crate::icat::CatAlgebra;
use crate::linspace::{BilMap, LinMap, Space, Vector};
use crate::xmod::{identity_xmod_assoc, identity_xmod_lie, zero_xmod_assoc, zero_xmod_lie, XModAssoc, XModLie};

type BResult<T> = Result<T, FrontendError>;

#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Algebra { algebra: Algebra, flavor: Option<Flavor> },
    Map(LinMap),
    Bilinear(BilMap),
    AssocAction(AssocAction),
    LieAction(LieAction),
    XModAssoc(XModAssoc),
    XModLie(XModLie),
    XBraidingAssoc(XBraidingAssoc),
    XBraidingLie(XBraidingLie),
    Cat(CatAlgebra),
    CatBraiding { braiding: CatBraiding, variant: LieVariant },
    Group(FiniteGroup),
    GroupXMod(GroupXMod),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra { .. } => "an algebra",
            Object::Map(_) => "a linear map",
            Object::Bilinear(_) => "a bilinear map",
            Object::AssocAction(_) => "an associative action",
            Object::LieAction(_) => "a Lie action",
            Object::XModAssoc(_) => "an associative crossed module",
            Object::XModLie(_) => "a Lie crossed module",
            Object::XBraidingAssoc(_) => "a braided associative crossed module",
            Object::XBraidingLie(_) => "a braided Lie crossed module",
            Object::Cat(_) => "a categorical algebra",
            Object::CatBraiding { .. } => "a braided categorical algebra",
            Object::Group(_) => "a group",
            Object::GroupXMod(_) => "a crossed module of groups",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Binding {
    pub name: String,
    pub pos: Pos,
    pub object: Object,
    /// Earlier declarations this one mentions.
    pub uses: Vec<String>,
}

/// Declarations in source order, each resolved to an object.
#[derive(Clone, Debug)]
pub struct Env {
    pub field: Field,
    bindings: Vec<Binding>,
    index: HashMap<String, usize>,
}

impl Env {
    pub fn new(field: Field) -> Env {
        Env { field, bindings: Vec::new(), index: HashMap::new() }
    }

    pub fn bindings(&self) -> &[Binding] {
        &self.bindings
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.index.get(name).map(|&i| &self.bindings[i])
    }

    /// Declarations no later declaration builds on, in source order.
    pub fn roots(&self) -> Vec<&Binding> {
        let used: HashSet<&str> = self.bindings.iter().flat_map(|b| b.uses.iter().map(String::as_str)).collect();
        self.bindings.iter().filter(|b| !used.contains(b.name.as_str())).collect()
    }

    fn insert(&mut self, name: &Name, object: Object, uses: Vec<String>) -> BResult<()> {
        if let Some(prev) = self.get(&name.text) {
            return Err(FrontendError::invalid(
                name.pos,
                format!("`{}` is already declared at {}:{}", name.text, prev.pos.line, prev.pos.column),
            ));
        }
        self.index.insert(name.text.clone(), self.bindings.len());
        self.bindings.push(Binding { name: name.text.clone(), pos: name.pos, object, uses });
        Ok(())
    }

    fn lookup(&self, n: &Name) -> BResult<&Object> {
        self.get(&n.text).map(|b| &b.object).ok_or_else(|| FrontendError::unknown(n.pos, &n.text))
    }

    fn wrong(&self, n: &Name, found: &Object, expected: &str) -> FrontendError {
        FrontendError::invalid(n.pos, format!("`{}` is {}, expected {expected}", n.text, found.kind()))
    }

    fn algebra(&self, n: &Name) -> BResult<&Algebra> {
        match self.lookup(n)? {
            Object::Algebra { algebra, .. } => Ok(algebra),
            o => Err(self.wrong(n, o, "an algebra")),
        }
    }

    fn linmap(&self, n: &Name) -> BResult<&LinMap> {
        match self.lookup(n)? {
            Object::Map(f) => Ok(f),
            o => Err(self.wrong(n, o, "a linear map")),
        }
    }

    fn bilinear(&self, n: &Name) -> BResult<&BilMap> {
        match self.lookup(n)? {
            Object::Bilinear(b) => Ok(b),
            o => Err(self.wrong(n, o, "a bilinear map")),
        }
    }

    fn group(&self, n: &Name) -> BResult<&FiniteGroup> {
        match self.lookup(n)? {
            Object::Group(g) => Ok(g),
            o => Err(self.wrong(n, o, "a group")),
        }
    }
}

pub fn build(doc: &Document) -> BResult<Env> {
    let mut env = Env::new(doc.field);
    for d in &doc.decls {
        let object = build_decl(&env, d)?;
        let uses = mentions(&env, d);
        env.insert(d.name(), object, uses)?;
    }
    Ok(env)
}

/// Names of earlier declarations appearing in `d`.
fn mentions(env: &Env, d: &Decl) -> Vec<String> {
    let mut names: Vec<&Name> = Vec::new();
    match d {
        Decl::Algebra(a) => {
            if let AlgebraBody::Fixture(fx) = &a.body {
                names.extend(fx.args.iter().flatten());
            }
        }
        Decl::Map(m) => names.extend([&m.domain, &m.codomain]),
        Decl::Bilinear(b) => names.extend([&b.left, &b.right, &b.codomain]),
        Decl::Block(b) => match &b.body {
            BlockBody::Fixture(fx) => names.extend(fx.args.iter().flatten()),
            BlockBody::Fields(lines) => {
                if b.kind != BlockKind::Group {
                    for l in lines {
                        names.extend(&l.values);
                    }
                }
            }
        },
    }
    let mut out: Vec<String> = Vec::new();
    for n in names {
        if env.get(&n.text).is_some() && !out.contains(&n.text) {
            out.push(n.text.clone());
        }
    }
    out
}

fn core_err(d: &Name) -> impl Fn(crate::error::Error) -> FrontendError + '_ {
    move |e| FrontendError::core(Some(d.pos), &d.text, e)
}

fn build_decl(env: &Env, d: &Decl) -> BResult<Object> {
    match d {
        Decl::Algebra(a) => build_algebra(env, a),
        Decl::Map(m) => build_map(env, m).map(Object::Map),
        Decl::Bilinear(b) => build_bilinear(env, b).map(Object::Bilinear),
        Decl::Block(b) => match b.kind {
            BlockKind::Action => build_action(env, b),
            BlockKind::XMod => build_xmod(env, b),
            BlockKind::Braiding => build_braiding(env, b),
            BlockKind::Cat => build_cat(env, b),
            BlockKind::Group => build_group(env, b).map(Object::Group),
            BlockKind::GroupXMod => build_group_xmod(env, b).map(Object::GroupXMod),
        },
    }
}

fn vector(space: &Space, e: &Expr) -> BResult<Vector> {
    let mut v = space.zero();
    for t in &e.terms {
        let i = space.label_index(&t.label.text).ok_or_else(|| FrontendError::unknown(t.label.pos, &t.label.text))?;
        v.0[i] += &t.coeff;
    }
    Ok(v)
}

fn label_index(space: &Space, n: &Name) -> BResult<usize> {
    space.label_index(&n.text).ok_or_else(|| FrontendError::unknown(n.pos, &n.text))
}

fn build_algebra(env: &Env, a: &AlgebraDecl) -> BResult<Object> {
    let mut flavor = None;
    let mut antisymmetric = false;
    for attr in &a.attrs {
        match attr.text.as_str() {
            "assoc" | "lie" => {
                let f = if attr.text == "assoc" { Flavor::Assoc } else { Flavor::Lie };
                if flavor.is_some_and(|g| g != f) {
                    return Err(FrontendError::invalid(attr.pos, "an algebra is declared either assoc or lie"));
                }
                flavor = Some(f);
            }
            _ => antisymmetric = true,
        }
    }
    let algebra = match &a.body {
        AlgebraBody::Fixture(fx) => {
            if antisymmetric {
                return Err(FrontendError::invalid(a.name.pos, "`antisymmetric` applies to explicit products only"));
            }
            let text = match &fx.args {
                None => fx.name.text.clone(),
                Some(args) => {
                    let args: Vec<&str> = args.iter().map(|n| n.text.as_str()).collect();
                    format!("{}({})", fx.name.text, args.join(","))
                }
            };
            fixture(&text, env.field).map_err(|e| FrontendError::core(Some(fx.name.pos), &a.name.text, e))?
        }
        AlgebraBody::Explicit { basis, products } => {
            let mut seen = HashSet::new();
            for b in basis {
                if !seen.insert(b.text.as_str()) {
                    return Err(FrontendError::invalid(b.pos, format!("basis label `{}` repeated", b.text)));
                }
            }
            let space =
                Space::new(env.field, basis.iter().map(|b| b.text.clone()).collect()).map_err(core_err(&a.name))?;
            let d = space.dim();
            let mut table: Vec<Option<Vector>> = vec![None; d * d];
            for r in products {
                let (i, j) = (label_index(&space, &r.args[0])?, label_index(&space, &r.args[1])?);
                if table[i * d + j].is_some() {
                    return Err(FrontendError::invalid(
                        r.args[0].pos,
                        format!("product {}*{} given twice", r.args[0].text, r.args[1].text),
                    ));
                }
                table[i * d + j] = Some(vector(&space, &r.value)?);
            }
            if antisymmetric {
                for r in products {
                    let (i, j) = (label_index(&space, &r.args[0])?, label_index(&space, &r.args[1])?);
                    let v = table[i * d + j].clone().expect("filled above");
                    let neg = -&v;
                    match &table[j * d + i] {
                        Some(w) if *w != neg => {
                            return Err(FrontendError::invalid(
                                r.args[0].pos,
                                format!(
                                    "antisymmetric algebra lists {}*{} and {}*{} inconsistently",
                                    r.args[0].text, r.args[1].text, r.args[1].text, r.args[0].text
                                ),
                            ))
                        }
                        Some(_) => {}
                        None => table[j * d + i] = Some(neg),
                    }
                }
            }
            Algebra::from_fn(space.clone(), |i, j| table[i * d + j].clone().unwrap_or_else(|| space.zero()))
        }
    };
    Ok(Object::Algebra { algebra, flavor })
}

fn build_map(env: &Env, m: &MapDecl) -> BResult<LinMap> {
    let (dom, cod) = (env.algebra(&m.domain)?.space(), env.algebra(&m.codomain)?.space());
    let mut cols: Vec<Option<Vector>> = vec![None; dom.dim()];
    for r in &m.images {
        let i = label_index(dom, &r.args[0])?;
        if cols[i].is_some() {
            return Err(FrontendError::invalid(r.args[0].pos, format!("image of `{}` given twice", r.args[0].text)));
        }
        cols[i] = Some(vector(cod, &r.value)?);
    }
    Ok(LinMap::from_fn(dom, cod, |i| cols[i].clone().unwrap_or_else(|| cod.zero())))
}

fn build_bilinear(env: &Env, b: &BilinearDecl) -> BResult<BilMap> {
    let (l, r, c) = (env.algebra(&b.left)?.space(), env.algebra(&b.right)?.space(), env.algebra(&b.codomain)?.space());
    let dr = r.dim();
    let mut images: Vec<Option<Vector>> = vec![None; l.dim() * dr];
    for rule in &b.images {
        let (i, j) = (label_index(l, &rule.args[0])?, label_index(r, &rule.args[1])?);
        if images[i * dr + j].is_some() {
            return Err(FrontendError::invalid(
                rule.args[0].pos,
                format!("image of ({}, {}) given twice", rule.args[0].text, rule.args[1].text),
            ));
        }
        images[i * dr + j] = Some(vector(c, &rule.value)?);
    }
    Ok(BilMap::from_fn(l, r, c, |i, j| images[i * dr + j].clone().unwrap_or_else(|| c.zero())))
}

/// Field lines of a block, checked against the allowed keys.
struct Fields<'a> {
    block: &'a BlockDecl,
    lines: &'a [FieldLine],
}

impl<'a> Fields<'a> {
    fn of(block: &'a BlockDecl, allowed: &[&str], repeatable: &[&str]) -> BResult<Fields<'a>> {
        let BlockBody::Fields(lines) = &block.body else { unreachable!("fixture bodies are handled by the caller") };
        let mut seen = HashSet::new();
        for l in lines {
            let key = l.key.text.as_str();
            if !allowed.contains(&key) {
                return Err(FrontendError::invalid(
                    l.key.pos,
                    format!(
                        "unknown field `{key}` in {} block; expected one of {}",
                        block.kind.keyword(),
                        allowed.join(", ")
                    ),
                ));
            }
            if !repeatable.contains(&key) {
                if !seen.insert(key) {
                    return Err(FrontendError::invalid(l.key.pos, format!("field `{key}` given twice")));
                }
                if let Some(h) = &l.head {
                    return Err(FrontendError::invalid(h.pos, format!("field `{key}` takes no `name:` prefix")));
                }
            }
        }
        Ok(Fields { block, lines })
    }

    fn line(&self, key: &str) -> Option<&'a FieldLine> {
        self.lines.iter().find(|l| l.key.text == key)
    }

    fn all(&self, key: &'a str) -> impl Iterator<Item = &'a FieldLine> + 'a {
        self.lines.iter().filter(move |l| l.key.text == key)
    }

    fn optional(&self, key: &str) -> BResult<Option<&'a Name>> {
        match self.line(key) {
            None => Ok(None),
            Some(l) if l.values.len() == 1 => Ok(Some(&l.values[0])),
            Some(l) => Err(FrontendError::invalid(l.key.pos, format!("field `{key}` takes a single name"))),
        }
    }

    fn one(&self, key: &str) -> BResult<&'a Name> {
        self.optional(key)?.ok_or_else(|| {
            FrontendError::invalid(
                self.block.name.pos,
                format!("{} block `{}` lacks `{key}`", self.block.kind.keyword(), self.block.name.text),
            )
        })
    }
}

fn fixture_args(fx: &Fixture, count: usize) -> BResult<&[Name]> {
    match &fx.args {
        Some(a) if a.len() == count => Ok(a),
        _ => Err(FrontendError::invalid(fx.name.pos, format!("`{}` takes {count} argument(s)", fx.name.text))),
    }
}

fn unknown_fixture(fx: &Fixture, kind: &str, known: &[&str]) -> FrontendError {
    FrontendError::invalid(
        fx.name.pos,
        format!("unknown {kind} fixture `{}`; known: {}", fx.name.text, known.join(", ")),
    )
}

fn flavor_of(b: &BlockDecl) -> Flavor {
    b.flavor.expect("parser requires a flavor on this block")
}

fn build_action(env: &Env, b: &BlockDecl) -> BResult<Object> {
    let err = core_err(&b.name);
    let flavor = flavor_of(b);
    if let BlockBody::Fixture(fx) = &b.body {
        return match (flavor, fx.name.text.as_str()) {
            (Flavor::Assoc, "self") => {
                let a = env.algebra(&fixture_args(fx, 1)?[0])?;
                Ok(Object::AssocAction(AssocAction::self_action(a).map_err(err)?))
            }
            (Flavor::Lie, "adjoint") => {
                let a = env.algebra(&fixture_args(fx, 1)?[0])?;
                Ok(Object::LieAction(LieAction::adjoint(a).map_err(err)?))
            }
            (Flavor::Lie, "induced") => {
                let n = &fixture_args(fx, 1)?[0];
                match env.lookup(n)? {
                    Object::AssocAction(a) => Ok(Object::LieAction(induced_lie_action(a).map_err(err)?)),
                    o => Err(env.wrong(n, o, "an associative action")),
                }
            }
            (_, "zero") => {
                let args = fixture_args(fx, 2)?;
                let (actor, module) = (env.algebra(&args[0])?, env.algebra(&args[1])?);
                Ok(match flavor {
                    Flavor::Assoc => Object::AssocAction(AssocAction::zero(actor, module)),
                    Flavor::Lie => Object::LieAction(LieAction::zero(actor, module)),
                })
            }
            (Flavor::Assoc, _) => Err(unknown_fixture(fx, "assoc action", &["self(A)", "zero(N, M)"])),
            (Flavor::Lie, _) => Err(unknown_fixture(fx, "lie action", &["adjoint(L)", "induced(ACT)", "zero(N, M)"])),
        };
    }
    match flavor {
        Flavor::Assoc => {
            let f = Fields::of(b, &["actor", "module", "left", "right"], &[])?;
            let (actor, module) = (env.algebra(f.one("actor")?)?, env.algebra(f.one("module")?)?);
            let (left, right) = (env.bilinear(f.one("left")?)?, env.bilinear(f.one("right")?)?);
            let a = AssocAction::from_parts(actor.clone(), module.clone(), left.clone(), right.clone()).map_err(err)?;
            Ok(Object::AssocAction(a))
        }
        Flavor::Lie => {
            let f = Fields::of(b, &["actor", "module", "dot"], &[])?;
            let (actor, module) = (env.algebra(f.one("actor")?)?, env.algebra(f.one("module")?)?);
            let dot = env.bilinear(f.one("dot")?)?;
            Ok(Object::LieAction(LieAction::from_parts(actor.clone(), module.clone(), dot.clone()).map_err(err)?))
        }
    }
}

fn build_xmod(env: &Env, b: &BlockDecl) -> BResult<Object> {
    let err = core_err(&b.name);
    let flavor = flavor_of(b);
    if let BlockBody::Fixture(fx) = &b.body {
        return match fx.name.text.as_str() {
            "identity" => {
                let a = env.algebra(&fixture_args(fx, 1)?[0])?;
                Ok(match flavor {
                    Flavor::Assoc => Object::XModAssoc(identity_xmod_assoc(a).map_err(err)?),
                    Flavor::Lie => Object::XModLie(identity_xmod_lie(a).map_err(err)?),
                })
            }
            "zero" => {
                let args = fixture_args(fx, 2)?;
                let (m, n) = (env.algebra(&args[0])?, env.algebra(&args[1])?);
                Ok(match flavor {
                    Flavor::Assoc => Object::XModAssoc(zero_xmod_assoc(m, n)),
                    Flavor::Lie => Object::XModLie(zero_xmod_lie(m, n)),
                })
            }
            _ => Err(unknown_fixture(fx, "xmod", &["identity(A)", "zero(M, N)"])),
        };
    }
    let f = Fields::of(b, &["action", "boundary"], &[])?;
    let an = f.one("action")?;
    let d = env.linmap(f.one("boundary")?)?.clone();
    match (flavor, env.lookup(an)?) {
        (Flavor::Assoc, Object::AssocAction(a)) => {
            Ok(Object::XModAssoc(XModAssoc::from_parts(a.clone(), d).map_err(err)?))
        }
        (Flavor::Lie, Object::LieAction(a)) => Ok(Object::XModLie(XModLie::from_parts(a.clone(), d).map_err(err)?)),
        (Flavor::Assoc, o) => Err(env.wrong(an, o, "an associative action")),
        (Flavor::Lie, o) => Err(env.wrong(an, o, "a Lie action")),
    }
}

fn build_braiding(env: &Env, b: &BlockDecl) -> BResult<Object> {
    let err = core_err(&b.name);
    if let BlockBody::Fixture(fx) = &b.body {
        let a = env.algebra(
            &fixture_args(fx, 1).map_err(|_| unknown_fixture(fx, "braiding", &["commutator(A)", "bracket(L)"]))?[0],
        );
        return match fx.name.text.as_str() {
            "commutator" => Ok(Object::XBraidingAssoc(commutator_braiding(a?).map_err(err)?)),
            "bracket" => Ok(Object::XBraidingLie(bracket_braiding(a?).map_err(err)?)),
            _ => Err(unknown_fixture(fx, "braiding", &["commutator(A)", "bracket(L)"])),
        };
    }
    let f = Fields::of(b, &["base", "brace", "tau", "variant"], &[])?;
    let base = f.one("base")?;
    let variant = match f.optional("variant")? {
        None => None,
        Some(v) => match v.text.as_str() {
            "ulualan" => Some(LieVariant::Ulualan),
            "alt" => Some(LieVariant::Alt),
            _ => return Err(FrontendError::invalid(v.pos, "variant is `ulualan` or `alt`")),
        },
    };
    let misplaced = |key: &str, hint: &str| -> BResult<()> {
        match f.line(key) {
            Some(l) => Err(FrontendError::invalid(l.key.pos, hint.to_string())),
            None => Ok(()),
        }
    };
    match env.lookup(base)? {
        Object::XModAssoc(x) => {
            misplaced("tau", "a braiding on a crossed module takes `brace`")?;
            misplaced("variant", "`variant` applies to Lie categorical braidings")?;
            let brace = env.bilinear(f.one("brace")?)?;
            Ok(Object::XBraidingAssoc(XBraidingAssoc::from_parts(x.clone(), brace.clone()).map_err(err)?))
        }
        Object::XModLie(x) => {
            misplaced("tau", "a braiding on a crossed module takes `brace`")?;
            misplaced("variant", "`variant` applies to Lie categorical braidings")?;
            let brace = env.bilinear(f.one("brace")?)?;
            Ok(Object::XBraidingLie(XBraidingLie::from_parts(x.clone(), brace.clone()).map_err(err)?))
        }
        Object::Cat(c) => {
            misplaced("brace", "a braiding on a categorical algebra takes `tau`")?;
            if c.flavor() == Flavor::Assoc && variant.is_some() {
                misplaced("variant", "`variant` applies to Lie categorical braidings")?;
            }
            let tau = env.bilinear(f.one("tau")?)?;
            let braiding = CatBraiding::from_parts(c.clone(), tau.clone()).map_err(err)?;
            Ok(Object::CatBraiding { braiding, variant: variant.unwrap_or(LieVariant::Ulualan) })
        }
        o => Err(env.wrong(base, o, "a crossed module or a categorical algebra")),
    }
}

fn build_cat(env: &Env, b: &BlockDecl) -> BResult<Object> {
    let err = core_err(&b.name);
    let flavor = flavor_of(b);
    if let BlockBody::Fixture(fx) = &b.body {
        return match fx.name.text.as_str() {
            "discrete" => {
                let a = env.algebra(&fixture_args(fx, 1)?[0])?;
                Ok(Object::Cat(CatAlgebra::discrete(a, flavor).map_err(err)?))
            }
            _ => Err(unknown_fixture(fx, "cat", &["discrete(A)"])),
        };
    }
    let f = Fields::of(b, &["c1", "c0", "s", "t", "e", "k"], &[])?;
    let (c1, c0) = (env.algebra(f.one("c1")?)?, env.algebra(f.one("c0")?)?);
    let (s, t, e) = (env.linmap(f.one("s")?)?, env.linmap(f.one("t")?)?, env.linmap(f.one("e")?)?);
    let c = CatAlgebra::from_parts(c1.clone(), c0.clone(), s.clone(), t.clone(), e.clone(), flavor).map_err(&err)?;
    if let Some(l) = f.line("k") {
        // k(x, y) = K1 x + K2 y must be the forced x - e(t(x)) + y
        if l.values.len() != 2 {
            return Err(FrontendError::invalid(l.key.pos, "`k` names two maps C1 -> C1"));
        }
        let (k1, k2) = (env.linmap(&l.values[0])?, env.linmap(&l.values[1])?);
        let id = LinMap::identity(c1.space());
        let et = e.compose(t).map_err(&err)?;
        let forced = id.add(&et.scale(&-env.field.one()));
        if k1.columns() != forced.columns() || k2.columns() != id.columns() {
            return Err(FrontendError::invalid(
                l.key.pos,
                "explicit composition differs from the forced k(x, y) = x - e(t(x)) + y",
            ));
        }
    }
    Ok(Object::Cat(c))
}

fn element(g: &FiniteGroup, n: &Name) -> BResult<usize> {
    g.index_of(&n.text).ok_or_else(|| FrontendError::unknown(n.pos, &n.text))
}

fn build_group(_env: &Env, b: &BlockDecl) -> BResult<FiniteGroup> {
    if let BlockBody::Fixture(fx) = &b.body {
        if fx.args.is_some() {
            return Err(FrontendError::invalid(fx.name.pos, "group fixtures take no arguments"));
        }
        return group_fixture(&fx.name.text).map_err(core_err(&b.name));
    }
    let f = Fields::of(b, &["elements", "row"], &["row"])?;
    let names: Vec<String> = f
        .line("elements")
        .ok_or_else(|| FrontendError::invalid(b.name.pos, "group block lacks `elements`"))?
        .values
        .iter()
        .map(|n| n.text.clone())
        .collect();
    let index =
        |n: &Name| names.iter().position(|x| *x == n.text).ok_or_else(|| FrontendError::unknown(n.pos, &n.text));
    let mut table: Vec<Option<Vec<usize>>> = vec![None; names.len()];
    for l in f.all("row") {
        let head = l.head.as_ref().ok_or_else(|| FrontendError::invalid(l.key.pos, "`row` needs `element:`"))?;
        let i = index(head)?;
        if table[i].is_some() {
            return Err(FrontendError::invalid(head.pos, format!("row `{}` given twice", head.text)));
        }
        if l.values.len() != names.len() {
            return Err(FrontendError::invalid(head.pos, format!("row `{}` needs {} entries", head.text, names.len())));
        }
        table[i] = Some(l.values.iter().map(index).collect::<BResult<_>>()?);
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| FrontendError::invalid(b.name.pos, format!("row `{}` missing", names[i]))))
        .collect::<BResult<Vec<_>>>()?;
    FiniteGroup::from_table(names, table).map_err(core_err(&b.name))
}

fn build_group_xmod(env: &Env, b: &BlockDecl) -> BResult<GroupXMod> {
    if let BlockBody::Fixture(fx) = &b.body {
        if fx.name.text != "conj" {
            return Err(unknown_fixture(fx, "groupxmod", &["conj(G)"]));
        }
        return Ok(conjugation_example(env.group(&fixture_args(fx, 1)?[0])?));
    }
    let f = Fields::of(b, &["g", "h", "boundary", "act", "brace"], &["act", "brace"])?;
    let (g, h) = (env.group(f.one("g")?)?, env.group(f.one("h")?)?);
    let bl =
        f.line("boundary").ok_or_else(|| FrontendError::invalid(b.name.pos, "groupxmod block lacks `boundary`"))?;
    if bl.values.len() != g.order() {
        return Err(FrontendError::invalid(
            bl.key.pos,
            format!("boundary lists {} images, G has {} elements", bl.values.len(), g.order()),
        ));
    }
    let boundary = bl.values.iter().map(|n| element(h, n)).collect::<BResult<Vec<_>>>()?;
    // rows indexed by H, entries in G order
    let rows = |key: &'static str, width: usize| -> BResult<Option<Vec<Vec<usize>>>> {
        let mut table: Vec<Option<Vec<usize>>> = vec![None; h.order()];
        let mut any = false;
        for l in f.all(key) {
            any = true;
            let head = l
                .head
                .as_ref()
                .ok_or_else(|| FrontendError::invalid(l.key.pos, format!("`{key}` needs `element:`")))?;
            let i = element(h, head)?;
            if table[i].is_some() {
                return Err(FrontendError::invalid(head.pos, format!("`{key} {}` given twice", head.text)));
            }
            if l.values.len() != width {
                return Err(FrontendError::invalid(head.pos, format!("`{key} {}` needs {width} entries", head.text)));
            }
            table[i] = Some(l.values.iter().map(|n| element(g, n)).collect::<BResult<_>>()?);
        }
        if !any {
            return Ok(None);
        }
        table
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or_else(|| FrontendError::invalid(b.name.pos, format!("`{key} {}` missing", h.name(i)))))
            .collect::<BResult<Vec<_>>>()
            .map(Some)
    };
    let action = rows("act", g.order())?
        .ok_or_else(|| FrontendError::invalid(b.name.pos, "groupxmod block lacks `act` rows"))?;
    let brace = rows("brace", h.order())?;
    GroupXMod::new(g.clone(), h.clone(), action, boundary, brace).map_err(core_err(&b.name))
}
