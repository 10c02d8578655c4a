//! Core objects back to declarations. Every component gets its own
//! explicit declaration named after the object (`B_M`, `B_act`, `B_d`, ...),
//! so the output rebuilds to an equal object without consulting fixtures.

use std::collections::HashSet;

use super::ast::*;
use crate::action::{AssocAction, LieAction};
use crate::algebra::{Algebra, Flavor};
use crate::braid::{CatBraiding, LieVariant, XBraidingAssoc, XBraidingLie};
use crate::field::Field;
use crate::groupx::{FiniteGroup, GroupXMod};
use crate::icat::CatAlgebra;
use crate::linspace::{BilMap, LinMap, Space, Vector};
use crate::xmod::{XModAssoc, XModLie};

use super::build::Object;

/// A single-object document declaring `name` last.
pub fn emit_object(field: Field, name: &str, object: &Object) -> Document {
    let mut e = Emitter::new(field);
    e.object(name, object);
    e.finish()
}

pub struct Emitter {
    field: Field,
    decls: Vec<Decl>,
    taken: HashSet<String>,
}

fn expr(space: &Space, v: &Vector) -> Expr {
    let terms =
        v.0.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Term { coeff: c.clone(), label: Name::new(&space.labels()[i]) })
            .collect();
    Expr { terms, pos: Default::default() }
}

fn line(key: &str, values: &[&str]) -> FieldLine {
    FieldLine { key: Name::new(key), head: None, values: values.iter().map(|v| Name::new(*v)).collect() }
}

fn headed(key: &str, head: &str, values: Vec<String>) -> FieldLine {
    FieldLine { key: Name::new(key), head: Some(Name::new(head)), values: values.into_iter().map(Name::new).collect() }
}

impl Emitter {
    pub fn new(field: Field) -> Emitter {
        Emitter { field, decls: Vec::new(), taken: HashSet::new() }
    }

    pub fn finish(self) -> Document {
        Document { field: self.field, decls: self.decls }
    }

    fn fresh(&mut self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 2;
        while self.taken.contains(&name) {
            name = format!("{base}_{k}");
            k += 1;
        }
        self.taken.insert(name.clone());
        name
    }

    pub fn object(&mut self, name: &str, o: &Object) -> String {
        match o {
            Object::Algebra { algebra, flavor } => self.algebra(name, algebra, *flavor),
            Object::Map(f) => {
                let d = self.algebra(&format!("{name}_dom"), &Algebra::abelian(f.domain().clone()), None);
                let c = self.algebra(&format!("{name}_cod"), &Algebra::abelian(f.codomain().clone()), None);
                self.map(name, f, &d, &c)
            }
            Object::Bilinear(b) => {
                let l = self.algebra(&format!("{name}_left"), &Algebra::abelian(b.left().clone()), None);
                let r = self.algebra(&format!("{name}_right"), &Algebra::abelian(b.right().clone()), None);
                let c = self.algebra(&format!("{name}_cod"), &Algebra::abelian(b.codomain().clone()), None);
                self.bilinear(name, b, &l, &r, &c)
            }
            Object::AssocAction(a) => {
                let n = self.algebra(&format!("{name}_N"), a.actor(), Some(Flavor::Assoc));
                let m = self.algebra(&format!("{name}_M"), a.module(), Some(Flavor::Assoc));
                self.assoc_action(name, a, &n, &m)
            }
            Object::LieAction(a) => {
                let n = self.algebra(&format!("{name}_N"), a.actor(), Some(Flavor::Lie));
                let m = self.algebra(&format!("{name}_M"), a.module(), Some(Flavor::Lie));
                self.lie_action(name, a, &n, &m)
            }
            Object::XModAssoc(x) => self.xmod_assoc(name, x).0,
            Object::XModLie(x) => self.xmod_lie(name, x).0,
            Object::XBraidingAssoc(b) => self.braiding_assoc(name, b),
            Object::XBraidingLie(b) => self.braiding_lie(name, b),
            Object::Cat(c) => self.cat(name, c).0,
            Object::CatBraiding { braiding, variant } => self.cat_braiding(name, braiding, *variant),
            Object::Group(g) => self.group(name, g),
            Object::GroupXMod(x) => self.group_xmod(name, x),
        }
    }

    pub fn algebra(&mut self, name: &str, a: &Algebra, flavor: Option<Flavor>) -> String {
        let name = self.fresh(name);
        let d = a.dim();
        let mut products = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let v = a.mul_basis(i, j);
                if !v.is_zero() {
                    let labels = a.space().labels();
                    products.push(Rule {
                        args: vec![Name::new(&labels[i]), Name::new(&labels[j])],
                        value: expr(a.space(), v),
                    });
                }
            }
        }
        let attrs = flavor.map(|f| vec![Name::new(f.as_str())]).unwrap_or_default();
        let basis = a.space().labels().iter().map(Name::new).collect();
        self.decls.push(Decl::Algebra(AlgebraDecl {
            name: Name::new(&name),
            attrs,
            body: AlgebraBody::Explicit { basis, products },
        }));
        name
    }

    pub fn map(&mut self, name: &str, f: &LinMap, dom: &str, cod: &str) -> String {
        let name = self.fresh(name);
        let images = (0..f.domain().dim())
            .filter(|&j| !f.column(j).is_zero())
            .map(|j| Rule { args: vec![Name::new(&f.domain().labels()[j])], value: expr(f.codomain(), f.column(j)) })
            .collect();
        self.decls.push(Decl::Map(MapDecl {
            name: Name::new(&name),
            domain: Name::new(dom),
            codomain: Name::new(cod),
            images,
        }));
        name
    }

    pub fn bilinear(&mut self, name: &str, b: &BilMap, l: &str, r: &str, c: &str) -> String {
        let name = self.fresh(name);
        let mut images = Vec::new();
        for i in 0..b.left().dim() {
            for j in 0..b.right().dim() {
                let v = b.image(i, j);
                if !v.is_zero() {
                    let args = vec![Name::new(&b.left().labels()[i]), Name::new(&b.right().labels()[j])];
                    images.push(Rule { args, value: expr(b.codomain(), v) });
                }
            }
        }
        self.decls.push(Decl::Bilinear(BilinearDecl {
            name: Name::new(&name),
            left: Name::new(l),
            right: Name::new(r),
            codomain: Name::new(c),
            images,
        }));
        name
    }

    fn block(&mut self, kind: BlockKind, flavor: Option<Flavor>, name: &str, lines: Vec<FieldLine>) -> String {
        let name = self.fresh(name);
        self.decls.push(Decl::Block(BlockDecl {
            kind,
            flavor,
            name: Name::new(&name),
            body: BlockBody::Fields(lines),
        }));
        name
    }

    fn assoc_action(&mut self, name: &str, a: &AssocAction, n: &str, m: &str) -> String {
        let left = self.bilinear(&format!("{name}_left"), a.left(), n, m, m);
        let right = self.bilinear(&format!("{name}_right"), a.right(), m, n, m);
        let lines = vec![line("actor", &[n]), line("module", &[m]), line("left", &[&left]), line("right", &[&right])];
        self.block(BlockKind::Action, Some(Flavor::Assoc), name, lines)
    }

    fn lie_action(&mut self, name: &str, a: &LieAction, n: &str, m: &str) -> String {
        let dot = self.bilinear(&format!("{name}_dot"), a.dot(), n, m, m);
        let lines = vec![line("actor", &[n]), line("module", &[m]), line("dot", &[&dot])];
        self.block(BlockKind::Action, Some(Flavor::Lie), name, lines)
    }

    /// Returns the names of the crossed module, `M` and `N`.
    fn xmod_assoc(&mut self, name: &str, x: &XModAssoc) -> (String, String, String) {
        let m = self.algebra(&format!("{name}_M"), x.m(), Some(Flavor::Assoc));
        let n = self.algebra(&format!("{name}_N"), x.n(), Some(Flavor::Assoc));
        let act = self.assoc_action(&format!("{name}_act"), x.action(), &n, &m);
        let d = self.map(&format!("{name}_d"), x.boundary(), &m, &n);
        let name = self.block(
            BlockKind::XMod,
            Some(Flavor::Assoc),
            name,
            vec![line("action", &[&act]), line("boundary", &[&d])],
        );
        (name, m, n)
    }

    fn xmod_lie(&mut self, name: &str, x: &XModLie) -> (String, String, String) {
        let m = self.algebra(&format!("{name}_M"), x.m(), Some(Flavor::Lie));
        let n = self.algebra(&format!("{name}_N"), x.n(), Some(Flavor::Lie));
        let act = self.lie_action(&format!("{name}_act"), x.action(), &n, &m);
        let d = self.map(&format!("{name}_d"), x.boundary(), &m, &n);
        let name = self.block(
            BlockKind::XMod,
            Some(Flavor::Lie),
            name,
            vec![line("action", &[&act]), line("boundary", &[&d])],
        );
        (name, m, n)
    }

    fn braiding_assoc(&mut self, name: &str, b: &XBraidingAssoc) -> String {
        let (x, m, n) = self.xmod_assoc(&format!("{name}_X"), b.base());
        let br = self.bilinear(&format!("{name}_brace"), b.brace(), &n, &n, &m);
        self.block(BlockKind::Braiding, None, name, vec![line("base", &[&x]), line("brace", &[&br])])
    }

    fn braiding_lie(&mut self, name: &str, b: &XBraidingLie) -> String {
        let (x, m, n) = self.xmod_lie(&format!("{name}_X"), b.base());
        let br = self.bilinear(&format!("{name}_brace"), b.brace(), &n, &n, &m);
        self.block(BlockKind::Braiding, None, name, vec![line("base", &[&x]), line("brace", &[&br])])
    }

    /// Returns the names of the categorical algebra, `C₁` and `C₀`.
    fn cat(&mut self, name: &str, c: &CatAlgebra) -> (String, String, String) {
        let f = Some(c.flavor());
        let c1 = self.algebra(&format!("{name}_C1"), c.c1(), f);
        let c0 = self.algebra(&format!("{name}_C0"), c.c0(), f);
        let s = self.map(&format!("{name}_s"), c.s(), &c1, &c0);
        let t = self.map(&format!("{name}_t"), c.t(), &c1, &c0);
        let e = self.map(&format!("{name}_e"), c.e(), &c0, &c1);
        let lines = vec![line("c1", &[&c1]), line("c0", &[&c0]), line("s", &[&s]), line("t", &[&t]), line("e", &[&e])];
        let name = self.block(BlockKind::Cat, f, name, lines);
        (name, c1, c0)
    }

    fn cat_braiding(&mut self, name: &str, b: &CatBraiding, variant: LieVariant) -> String {
        let (c, c1, c0) = self.cat(&format!("{name}_cat"), b.base());
        let tau = self.bilinear(&format!("{name}_tau"), b.tau(), &c0, &c0, &c1);
        let mut lines = vec![line("base", &[&c]), line("tau", &[&tau])];
        if b.flavor() == Flavor::Lie && variant != LieVariant::Ulualan {
            lines.push(line("variant", &[variant.as_str()]));
        }
        self.block(BlockKind::Braiding, None, name, lines)
    }

    fn group(&mut self, name: &str, g: &FiniteGroup) -> String {
        let mut lines = vec![FieldLine {
            key: Name::new("elements"),
            head: None,
            values: g.names().iter().map(Name::new).collect(),
        }];
        for (i, row) in g.table().iter().enumerate() {
            lines.push(headed("row", g.name(i), row.iter().map(|&x| g.name(x).to_string()).collect()));
        }
        self.block(BlockKind::Group, None, name, lines)
    }

    fn group_xmod(&mut self, name: &str, x: &GroupXMod) -> String {
        let g = self.group(&format!("{name}_G"), &x.g);
        let h = self.group(&format!("{name}_H"), &x.h);
        let gname = |a: usize| x.g.name(a).to_string();
        let mut lines = vec![line("g", &[&g]), line("h", &[&h])];
        lines.push(FieldLine {
            key: Name::new("boundary"),
            head: None,
            values: x.boundary.iter().map(|&b| Name::new(x.h.name(b))).collect(),
        });
        for (i, row) in x.action.iter().enumerate() {
            lines.push(headed("act", x.h.name(i), row.iter().map(|&a| gname(a)).collect()));
        }
        if let Some(br) = &x.brace {
            for (i, row) in br.iter().enumerate() {
                lines.push(headed("brace", x.h.name(i), row.iter().map(|&a| gname(a)).collect()));
            }
        }
        self.block(BlockKind::GroupXMod, None, name, lines)
    }
}
