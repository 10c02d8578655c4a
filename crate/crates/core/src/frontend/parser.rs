//! Recursive-descent parser. The first error stops parsing and reports the
//! set of tokens that would have been accepted there.
//!
//! ```text
//! document  := "field" ("Q" | "Fp" INT) [";"] decl*
//! decl      := algebra | map | bilinear | block | "field" ...
//! algebra   := "algebra" NAME attr* ("=" fixture ";" | "basis" [names] "{" product* "}")
//! attr      := "assoc" | "lie" | "antisymmetric"
//! product   := NAME "*" NAME "=" expr ";"
//! map       := "map" NAME ":" NAME "->" NAME "{" (NAME "|->" expr ";")* "}"
//! bilinear  := "bilinear" NAME ":" NAME "x" NAME "->" NAME "{" (NAME "," NAME "|->" expr ";")* "}"
//! block     := KIND ["assoc" | "lie"] NAME ("=" fixture ";" | "{" line* "}")
//! line      := KEY [NAME ":"] names ";"
//! fixture   := NAME ["(" arg ("," arg)* ")"]
//! expr      := ["-"] term (("+" | "-") term)*
//! term      := [INT ["/" INT] ["*"]] NAME
//! ```
//!
//! A lone `0` is the zero expression. The flavor after `action`, `xmod` and
//! `cat` is required.

use num_bigint::BigInt;

use super::ast::*;
use super::lexer::{tokenize, Tok, Token};
use super::{FrontendError, Pos};
use crate::algebra::Flavor;
use crate::field::{Field, Scalar};

const DECL_KEYWORDS: &[&str] =
    &["algebra", "map", "bilinear", "action", "xmod", "braiding", "cat", "group", "groupxmod", "field"];
const ATTRS: &[&str] = &["assoc", "lie", "antisymmetric"];

type PResult<T> = Result<T, FrontendError>;

pub fn parse(src: &str) -> PResult<Document> {
    let mut p = Parser { toks: tokenize(src)?, i: 0, field: Field::Rationals };
    p.document()
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
    field: Field,
}

fn quoted(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| format!("`{s}`")).collect()
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.i]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> Pos {
        self.peek().pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn fail<T>(&self, expected: Vec<String>) -> PResult<T> {
        let t = self.peek();
        Err(FrontendError::Syntax { line: t.pos.line, column: t.pos.column, expected, found: t.tok.describe() })
    }

    fn at_sym(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(x) if *x == s)
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(&self.peek().tok, Tok::Word(x) if x == w)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        let hit = self.at_sym(s);
        if hit {
            self.bump();
        }
        hit
    }

    fn expect_sym(&mut self, s: &str) -> PResult<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            self.fail(quoted(&[s]))
        }
    }

    fn expect_word(&mut self, w: &str) -> PResult<()> {
        if self.at_word(w) {
            self.bump();
            Ok(())
        } else {
            self.fail(quoted(&[w]))
        }
    }

    fn name(&mut self, what: &str) -> PResult<Name> {
        match &self.peek().tok {
            Tok::Word(w) => {
                let name = Name { text: w.clone(), pos: self.pos() };
                self.bump();
                Ok(name)
            }
            _ => self.fail(vec![what.to_string()]),
        }
    }

    fn names(&mut self, what: &str) -> PResult<Vec<Name>> {
        let mut out = vec![self.name(what)?];
        while self.eat_sym(",") {
            out.push(self.name(what)?);
        }
        Ok(out)
    }

    fn document(&mut self) -> PResult<Document> {
        self.field = self.field_decl()?;
        let mut decls = Vec::new();
        loop {
            match self.peek().tok.clone() {
                Tok::Eof => break,
                Tok::Word(w) if w == "field" => {
                    let pos = self.pos();
                    let f = self.field_decl()?;
                    if f != self.field {
                        return Err(FrontendError::FieldMismatch {
                            line: pos.line,
                            column: pos.column,
                            message: format!("document is over {}, redeclared as {f}", self.field),
                        });
                    }
                }
                Tok::Word(w) => decls.push(self.decl(&w)?),
                _ => return self.fail(quoted(DECL_KEYWORDS)),
            }
        }
        Ok(Document { field: self.field, decls })
    }

    fn field_decl(&mut self) -> PResult<Field> {
        self.expect_word("field")?;
        let f = if self.at_word("Q") {
            self.bump();
            Field::Rationals
        } else if self.at_word("Fp") {
            self.bump();
            let pos = self.pos();
            let p = match &self.peek().tok {
                Tok::Int(n) => n.parse::<u64>().ok(),
                _ => return self.fail(vec!["a prime".into()]),
            };
            self.bump();
            let p = p.ok_or_else(|| FrontendError::invalid(pos, "characteristic out of range"))?;
            Field::prime(p).map_err(|_| FrontendError::invalid(pos, format!("Fp needs a prime, found {p}")))?
        } else {
            return self.fail(quoted(&["Q", "Fp"]));
        };
        self.eat_sym(";");
        Ok(f)
    }

    fn decl(&mut self, keyword: &str) -> PResult<Decl> {
        match keyword {
            "algebra" => self.algebra().map(Decl::Algebra),
            "map" => self.map().map(Decl::Map),
            "bilinear" => self.bilinear().map(Decl::Bilinear),
            _ => match BlockKind::ALL.iter().find(|k| k.keyword() == keyword) {
                Some(&k) => self.block(k).map(Decl::Block),
                None => self.fail(quoted(DECL_KEYWORDS)),
            },
        }
    }

    fn algebra(&mut self) -> PResult<AlgebraDecl> {
        self.expect_word("algebra")?;
        let name = self.name("an algebra name")?;
        let mut attrs = Vec::new();
        while ATTRS.iter().any(|a| self.at_word(a)) {
            attrs.push(self.name("an attribute")?);
        }
        if self.eat_sym("=") {
            let f = self.fixture()?;
            self.expect_sym(";")?;
            return Ok(AlgebraDecl { name, attrs, body: AlgebraBody::Fixture(f) });
        }
        if !self.at_word("basis") {
            let mut exp = quoted(ATTRS);
            exp.extend(quoted(&["basis", "="]));
            return self.fail(exp);
        }
        self.bump();
        let basis = if self.at_sym("{") { Vec::new() } else { self.names("a basis label")? };
        self.expect_sym("{")?;
        let mut products = Vec::new();
        while !self.eat_sym("}") {
            if !matches!(self.peek().tok, Tok::Word(_)) {
                return self.fail(vec!["a basis label".into(), "`}`".into()]);
            }
            let a = self.name("a basis label")?;
            self.expect_sym("*")?;
            let b = self.name("a basis label")?;
            self.expect_sym("=")?;
            let value = self.expr()?;
            self.expect_sym(";")?;
            products.push(Rule { args: vec![a, b], value });
        }
        Ok(AlgebraDecl { name, attrs, body: AlgebraBody::Explicit { basis, products } })
    }

    fn map(&mut self) -> PResult<MapDecl> {
        self.expect_word("map")?;
        let name = self.name("a map name")?;
        self.expect_sym(":")?;
        let domain = self.name("an algebra name")?;
        self.expect_sym("->")?;
        let codomain = self.name("an algebra name")?;
        let images = self.rules(1)?;
        Ok(MapDecl { name, domain, codomain, images })
    }

    fn bilinear(&mut self) -> PResult<BilinearDecl> {
        self.expect_word("bilinear")?;
        let name = self.name("a map name")?;
        self.expect_sym(":")?;
        let left = self.name("an algebra name")?;
        self.expect_word("x")?;
        let right = self.name("an algebra name")?;
        self.expect_sym("->")?;
        let codomain = self.name("an algebra name")?;
        let images = self.rules(2)?;
        Ok(BilinearDecl { name, left, right, codomain, images })
    }

    /// `{ a |-> e; }` or `{ a, b |-> e; }`
    fn rules(&mut self, arity: usize) -> PResult<Vec<Rule>> {
        self.expect_sym("{")?;
        let mut out = Vec::new();
        while !self.eat_sym("}") {
            if !matches!(self.peek().tok, Tok::Word(_)) {
                return self.fail(vec!["a basis label".into(), "`}`".into()]);
            }
            let mut args = vec![self.name("a basis label")?];
            for _ in 1..arity {
                self.expect_sym(",")?;
                args.push(self.name("a basis label")?);
            }
            self.expect_sym("|->")?;
            let value = self.expr()?;
            self.expect_sym(";")?;
            out.push(Rule { args, value });
        }
        Ok(out)
    }

    fn block(&mut self, kind: BlockKind) -> PResult<BlockDecl> {
        self.bump();
        let flavor = if kind.has_flavor() {
            let f = if self.at_word("assoc") {
                Flavor::Assoc
            } else if self.at_word("lie") {
                Flavor::Lie
            } else {
                return self.fail(quoted(&["assoc", "lie"]));
            };
            self.bump();
            Some(f)
        } else {
            None
        };
        let name = self.name(&format!("a {} name", kind.keyword()))?;
        if self.eat_sym("=") {
            let f = self.fixture()?;
            self.expect_sym(";")?;
            return Ok(BlockDecl { kind, flavor, name, body: BlockBody::Fixture(f) });
        }
        if !self.at_sym("{") {
            return self.fail(quoted(&["=", "{"]));
        }
        self.bump();
        let mut lines = Vec::new();
        while !self.eat_sym("}") {
            if !matches!(self.peek().tok, Tok::Word(_)) {
                return self.fail(vec!["a field keyword".into(), "`}`".into()]);
            }
            let key = self.name("a field keyword")?;
            let first = self.name("a name")?;
            let (head, values) = if self.eat_sym(":") {
                (Some(first), self.names("a name")?)
            } else {
                let mut values = vec![first];
                while self.eat_sym(",") {
                    values.push(self.name("a name")?);
                }
                (None, values)
            };
            self.expect_sym(";")?;
            lines.push(FieldLine { key, head, values });
        }
        Ok(BlockDecl { kind, flavor, name, body: BlockBody::Fields(lines) })
    }

    fn fixture(&mut self) -> PResult<Fixture> {
        let name = self.name("a fixture name")?;
        if !self.eat_sym("(") {
            return Ok(Fixture { name, args: None });
        }
        let mut args = Vec::new();
        loop {
            let pos = self.pos();
            match self.peek().tok.clone() {
                Tok::Word(w) | Tok::Int(w) => {
                    self.bump();
                    args.push(Name { text: w, pos });
                }
                _ => return self.fail(vec!["a fixture argument".into()]),
            }
            if self.eat_sym(")") {
                break;
            }
            if !self.eat_sym(",") {
                return self.fail(quoted(&[",", ")"]));
            }
        }
        Ok(Fixture { name, args: Some(args) })
    }

    fn integer(&mut self) -> PResult<BigInt> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let v: BigInt = n.parse().expect("lexer yields digits");
                self.bump();
                Ok(v)
            }
            _ => self.fail(vec!["an integer".into()]),
        }
    }

    /// `INT ["/" INT]` as an element of the document's field.
    fn scalar(&mut self) -> PResult<Scalar> {
        let pos = self.pos();
        let num = self.integer()?;
        if !self.eat_sym("/") {
            return Ok(self.field.from_bigint(&num));
        }
        let den = self.integer()?;
        self.field.ratio(&num, &den).map_err(|_| FrontendError::FieldMismatch {
            line: pos.line,
            column: pos.column,
            message: format!("literal {num}/{den} has no value in {}", self.field),
        })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        if matches!(&self.peek().tok, Tok::Int(n) if n.bytes().all(|b| b == b'0'))
            && !matches!(self.peek_at(1), Tok::Word(_) | Tok::Sym("/") | Tok::Sym("*"))
        {
            self.bump();
            return Ok(Expr { terms: Vec::new(), pos });
        }
        let mut terms = Vec::new();
        let mut negative = self.eat_sym("-");
        loop {
            let coeff = if matches!(self.peek().tok, Tok::Int(_)) {
                let c = self.scalar()?;
                self.eat_sym("*");
                c
            } else {
                self.field.one()
            };
            let label = self.name("a basis label")?;
            terms.push(Term { coeff: if negative { -coeff } else { coeff }, label });
            if self.eat_sym("+") {
                negative = false;
            } else if self.eat_sym("-") {
                negative = true;
            } else {
                break;
            }
        }
        Ok(Expr { terms, pos })
    }
}
