//! Canonical text for a [`Document`]. Parsing the output gives back an equal
//! document.

use std::fmt::{self, Write};

use super::ast::*;

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field)?;
        for d in &self.decls {
            writeln!(f)?;
            write_decl(f, d)?;
        }
        Ok(())
    }
}

pub fn expr_text(e: &Expr) -> String {
    if e.terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, t) in e.terms.iter().enumerate() {
        let neg = t.coeff.is_negative();
        let c = if neg { t.coeff.abs() } else { t.coeff.clone() };
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !c.is_one() {
            let _ = write!(s, "{c} ");
        }
        s.push_str(&t.label.text);
    }
    s
}

fn names(ns: &[Name]) -> String {
    ns.iter().map(|n| n.text.as_str()).collect::<Vec<_>>().join(", ")
}

fn fixture_text(fx: &Fixture) -> String {
    match &fx.args {
        None => fx.name.text.clone(),
        Some(args) => format!("{}({})", fx.name.text, names(args)),
    }
}

fn write_rules(f: &mut fmt::Formatter<'_>, rules: &[Rule], sep: &str, arrow: &str) -> fmt::Result {
    if rules.is_empty() {
        return writeln!(f, " {{}}");
    }
    writeln!(f, " {{")?;
    for r in rules {
        let args: Vec<&str> = r.args.iter().map(|a| a.text.as_str()).collect();
        writeln!(f, "  {} {arrow} {};", args.join(sep), expr_text(&r.value))?;
    }
    writeln!(f, "}}")
}

fn write_decl(f: &mut fmt::Formatter<'_>, d: &Decl) -> fmt::Result {
    match d {
        Decl::Algebra(a) => {
            write!(f, "algebra {}", a.name.text)?;
            for attr in &a.attrs {
                write!(f, " {}", attr.text)?;
            }
            match &a.body {
                AlgebraBody::Fixture(fx) => writeln!(f, " = {};", fixture_text(fx)),
                AlgebraBody::Explicit { basis, products } => {
                    write!(f, " basis")?;
                    if !basis.is_empty() {
                        write!(f, " {}", names(basis))?;
                    }
                    if products.is_empty() {
                        return writeln!(f, " {{}}");
                    }
                    writeln!(f, " {{")?;
                    for r in products {
                        writeln!(f, "  {}*{} = {};", r.args[0].text, r.args[1].text, expr_text(&r.value))?;
                    }
                    writeln!(f, "}}")
                }
            }
        }
        Decl::Map(m) => {
            write!(f, "map {} : {} -> {}", m.name.text, m.domain.text, m.codomain.text)?;
            write_rules(f, &m.images, ", ", "|->")
        }
        Decl::Bilinear(b) => {
            write!(f, "bilinear {} : {} x {} -> {}", b.name.text, b.left.text, b.right.text, b.codomain.text)?;
            write_rules(f, &b.images, ", ", "|->")
        }
        Decl::Block(b) => {
            write!(f, "{}", b.kind.keyword())?;
            if let Some(fl) = b.flavor {
                write!(f, " {}", fl.as_str())?;
            }
            write!(f, " {}", b.name.text)?;
            match &b.body {
                BlockBody::Fixture(fx) => writeln!(f, " = {};", fixture_text(fx)),
                BlockBody::Fields(lines) => {
                    writeln!(f, " {{")?;
                    for l in lines {
                        write!(f, "  {}", l.key.text)?;
                        if let Some(h) = &l.head {
                            write!(f, " {}:", h.text)?;
                        }
                        writeln!(f, " {};", names(&l.values))?;
                    }
                    writeln!(f, "}}")
                }
            }
        }
    }
}
