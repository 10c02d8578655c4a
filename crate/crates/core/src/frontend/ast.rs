use crate::algebra::Flavor;
use crate::field::{Field, Scalar};

use super::Pos;

#[derive(Clone, Debug, PartialEq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Name {
        Name { text: text.into(), pos: Pos::default() }
    }
}

/// `coeff label`
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Scalar,
    pub label: Name,
}

/// A linear combination of basis labels; no terms means zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub terms: Vec<Term>,
    pub pos: Pos,
}

/// `args |-> value`; one argument for maps, two for products and bilinear maps.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub args: Vec<Name>,
    pub value: Expr,
}

/// `Name` or `Name(arg, ...)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: Name,
    pub args: Option<Vec<Name>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub field: Field,
    pub decls: Vec<Decl>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decl {
    Algebra(AlgebraDecl),
    Map(MapDecl),
    Bilinear(BilinearDecl),
    Block(BlockDecl),
}

impl Decl {
    pub fn name(&self) -> &Name {
        match self {
            Decl::Algebra(d) => &d.name,
            Decl::Map(d) => &d.name,
            Decl::Bilinear(d) => &d.name,
            Decl::Block(d) => &d.name,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDecl {
    pub name: Name,
    /// `assoc`, `lie`, `antisymmetric`
    pub attrs: Vec<Name>,
    pub body: AlgebraBody,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraBody {
    Fixture(Fixture),
    Explicit { basis: Vec<Name>, products: Vec<Rule> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MapDecl {
    pub name: Name,
    pub domain: Name,
    pub codomain: Name,
    pub images: Vec<Rule>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BilinearDecl {
    pub name: Name,
    pub left: Name,
    pub right: Name,
    pub codomain: Name,
    pub images: Vec<Rule>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Action,
    XMod,
    Braiding,
    Cat,
    Group,
    GroupXMod,
}

impl BlockKind {
    pub const ALL: [BlockKind; 6] = [
        BlockKind::Action,
        BlockKind::XMod,
        BlockKind::Braiding,
        BlockKind::Cat,
        BlockKind::Group,
        BlockKind::GroupXMod,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            BlockKind::Action => "action",
            BlockKind::XMod => "xmod",
            BlockKind::Braiding => "braiding",
            BlockKind::Cat => "cat",
            BlockKind::Group => "group",
            BlockKind::GroupXMod => "groupxmod",
        }
    }

    /// Blocks whose keyword is followed by `assoc` or `lie`.
    pub fn has_flavor(self) -> bool {
        matches!(self, BlockKind::Action | BlockKind::XMod | BlockKind::Cat)
    }
}

/// `key head: v1, v2;` or `key v1, v2;`
#[derive(Clone, Debug, PartialEq)]
pub struct FieldLine {
    pub key: Name,
    pub head: Option<Name>,
    pub values: Vec<Name>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BlockBody {
    Fixture(Fixture),
    Fields(Vec<FieldLine>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockDecl {
    pub kind: BlockKind,
    pub flavor: Option<Flavor>,
    pub name: Name,
    pub body: BlockBody,
}
