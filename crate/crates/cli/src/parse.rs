//! Text grammars for groups, iterated wreath chains, actions and wreath
//! product elements.
//!
//! ```text
//! group   := cyclic N | sym N | alt N | dihedral N | klein4 | quaternion
//!          | trivial | perm N ":" perm ("," perm)*
//! perm    := cycle+          cycle := "(" point* ")"
//! chain   := base ("wr" level)*
//! base    := group | descriptor
//! level   := int-translation | "(" head "," action ")"
//! head    := group | descriptor | int
//! action  := natural | regular | int-translation | perm-action N ":" perm ("," perm)*
//!          | "{" (torsion-type | not-torsion) "," (finite-orbits | infinite-orbits) "}"
//! descriptor := "{" STATUS "," (fg | nfg) "}" | "{" status ":" STATUS "," fg ":" BOOL "}"
//! element := term ("*" term)*      term := atom ("^" INT)?
//! atom    := "[" (INT ":" perm ("," INT ":" perm)*)? "]" headatom? | headatom | "{" element "}"
//! headatom := t | t "^" INT | e | perm
//! ```
//!
//! Points are 0-based and whitespace is insignificant.

use std::fmt;

use invariable::classify::ChainLevel;
use invariable::{
    named, ActionDescriptor, ActionSpec, BaseTuple, FiniteAction, FiniteGroup, GroupDescriptor,
    HeadElement, IgStatus, Perm, Point, Wreath, WreathElement,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub type ParseResult<T> = Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Word(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Word(w) => write!(f, "{w:?}"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> ParseResult<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_digit() || c == '-' {
            let mut text = String::from(bump(&mut chars));
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                text.push(bump(&mut chars));
            }
            let n = text
                .parse()
                .map_err(|_| pos.error(format!("invalid integer {text:?}")))?;
            out.push((Tok::Int(n), pos));
        } else if c.is_alphabetic() || c == '¬' || c == '_' {
            let mut text = String::new();
            while chars
                .peek()
                .is_some_and(|&c| c.is_alphanumeric() || c == '-' || c == '_' || c == '¬')
            {
                text.push(bump(&mut chars));
            }
            out.push((Tok::Word(text), pos));
        } else if "()[]{},:*^".contains(c) {
            bump(&mut chars);
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(pos.error(format!("unexpected character {c:?}")));
        }
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> ParseResult<Self> {
        Ok(Parser {
            toks: lex(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Word(x) if x == w)
    }

    fn expected<T>(&self, what: &str) -> ParseResult<T> {
        Err(self.pos().error(format!("expected {what}, found {}", self.peek())))
    }

    fn sym(&mut self, c: char) -> ParseResult<()> {
        if self.is_sym(c) {
            self.next();
            Ok(())
        } else {
            self.expected(&format!("'{c}'"))
        }
    }

    fn word(&mut self, w: &str) -> ParseResult<()> {
        if self.is_word(w) {
            self.next();
            Ok(())
        } else {
            self.expected(&format!("{w:?}"))
        }
    }

    fn int(&mut self) -> ParseResult<i64> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.next();
                Ok(n)
            }
            _ => self.expected("an integer"),
        }
    }

    fn size(&mut self) -> ParseResult<usize> {
        let pos = self.pos();
        let n = self.int()?;
        usize::try_from(n).map_err(|_| pos.error(format!("expected a non-negative integer, found {n}")))
    }

    fn finish(&mut self) -> ParseResult<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.expected("end of input")
        }
    }

    fn cycles(&mut self) -> ParseResult<Vec<Vec<u32>>> {
        if !self.is_sym('(') {
            return self.expected("a permutation in cycle notation");
        }
        let mut cycles = Vec::new();
        while self.is_sym('(') {
            self.next();
            let mut cycle = Vec::new();
            while !self.is_sym(')') {
                let pos = self.pos();
                let x = self.int()?;
                cycle.push(u32::try_from(x).map_err(|_| pos.error(format!("point {x} is negative")))?);
            }
            self.next();
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Ok(cycles)
    }

    fn perm(&mut self, degree: usize) -> ParseResult<Perm> {
        let pos = self.pos();
        let cycles = self.cycles()?;
        Perm::from_cycles(degree, &cycles).map_err(|e| pos.error(e.to_string()))
    }

    fn perm_list(&mut self, degree: usize) -> ParseResult<Vec<Perm>> {
        let mut out = vec![self.perm(degree)?];
        while self.is_sym(',') && *self.peek2() == Tok::Sym('(') {
            self.next();
            out.push(self.perm(degree)?);
        }
        Ok(out)
    }

    fn group(&mut self) -> ParseResult<GroupSpec> {
        let pos = self.pos();
        let Tok::Word(w) = self.peek().clone() else {
            return self.expected("a group");
        };
        self.next();
        let spec = match w.as_str() {
            "cyclic" => GroupSpec::Cyclic(self.size()?),
            "sym" => GroupSpec::Sym(self.size()?),
            "alt" => GroupSpec::Alt(self.size()?),
            "dihedral" => GroupSpec::Dihedral(self.size()?),
            "klein4" => GroupSpec::Klein4,
            "quaternion" => GroupSpec::Quaternion,
            "trivial" => GroupSpec::Trivial,
            "perm" => {
                let degree = self.size()?;
                self.sym(':')?;
                GroupSpec::Perm {
                    degree,
                    generators: self.perm_list(degree)?,
                }
            }
            other => return Err(pos.error(format!("unknown group {other:?}"))),
        };
        match spec {
            GroupSpec::Cyclic(0) => Err(pos.error("cyclic needs n >= 1")),
            GroupSpec::Dihedral(n) if n < 3 => Err(pos.error("dihedral needs n >= 3")),
            GroupSpec::Perm { degree: 0, .. } => Err(pos.error("perm needs degree >= 1")),
            s => Ok(s),
        }
    }

    fn status(&mut self) -> ParseResult<IgStatus> {
        let pos = self.pos();
        let Tok::Word(w) = self.next() else {
            return Err(pos.error("expected FIG, IG or NEG_IG"));
        };
        w.parse().map_err(|_| pos.error(format!("unknown status {w:?}")))
    }

    /// `{FIG, fg}` or `{status: FIG, fg: true}`; the opening brace is consumed.
    fn descriptor_body(&mut self, pos: Pos) -> ParseResult<GroupDescriptor> {
        let (status, fg) = if self.is_word("status") {
            self.next();
            self.sym(':')?;
            let status = self.status()?;
            self.sym(',')?;
            self.word("fg")?;
            self.sym(':')?;
            let fg = match self.next() {
                Tok::Word(w) if w == "true" => true,
                Tok::Word(w) if w == "false" => false,
                _ => return Err(self.toks[self.at - 1].1.error("expected true or false")),
            };
            (status, fg)
        } else {
            let status = self.status()?;
            self.sym(',')?;
            let fg = if self.is_word("fg") {
                true
            } else if self.is_word("nfg") {
                false
            } else {
                return self.expected("fg or nfg");
            };
            self.next();
            (status, fg)
        };
        self.sym('}')?;
        GroupDescriptor::new(status, fg).map_err(|e| pos.error(e.to_string()))
    }

    fn action_flags_body(&mut self) -> ParseResult<ActionDescriptor> {
        let torsion_type = if self.is_word("torsion-type") {
            true
        } else if self.is_word("not-torsion") {
            false
        } else {
            return self.expected("torsion-type or not-torsion");
        };
        self.next();
        self.sym(',')?;
        let finitely_many_orbits = if self.is_word("finite-orbits") {
            true
        } else if self.is_word("infinite-orbits") {
            false
        } else {
            return self.expected("finite-orbits or infinite-orbits");
        };
        self.next();
        self.sym('}')?;
        Ok(ActionDescriptor {
            torsion_type,
            finitely_many_orbits,
        })
    }

    fn base(&mut self) -> ParseResult<BaseSpec> {
        let pos = self.pos();
        if self.is_sym('{') {
            self.next();
            Ok(BaseSpec::Descriptor(self.descriptor_body(pos)?))
        } else {
            Ok(BaseSpec::Group(self.group()?))
        }
    }

    fn head(&mut self) -> ParseResult<HeadSpec> {
        let pos = self.pos();
        if self.is_sym('{') {
            self.next();
            Ok(HeadSpec::Descriptor(self.descriptor_body(pos)?))
        } else if self.is_word("int") {
            self.next();
            Ok(HeadSpec::Int)
        } else {
            Ok(HeadSpec::Group(self.group()?))
        }
    }

    fn action(&mut self) -> ParseResult<ActionText> {
        let pos = self.pos();
        if self.is_sym('{') {
            self.next();
            return Ok(ActionText::Flags(self.action_flags_body()?));
        }
        let Tok::Word(w) = self.peek().clone() else {
            return self.expected("an action");
        };
        self.next();
        match w.as_str() {
            "natural" => Ok(ActionText::Natural),
            "regular" => Ok(ActionText::Regular),
            "int-translation" => Ok(ActionText::IntTranslation),
            "perm-action" => {
                let degree = self.size()?;
                self.sym(':')?;
                Ok(ActionText::PermAction {
                    degree,
                    images: self.perm_list(degree)?,
                })
            }
            other => Err(pos.error(format!("unknown action {other:?}"))),
        }
    }

    fn level(&mut self) -> ParseResult<LevelSpec> {
        let pos = self.pos();
        if self.is_word("int-translation") {
            self.next();
            return Ok(LevelSpec {
                head: HeadSpec::Int,
                action: ActionText::IntTranslation,
                pos,
            });
        }
        self.sym('(')?;
        let head = self.head()?;
        self.sym(',')?;
        let action = self.action()?;
        self.sym(')')?;
        Ok(LevelSpec { head, action, pos })
    }

    fn chain(&mut self) -> ParseResult<ChainSpec> {
        let base = self.base()?;
        let mut levels = Vec::new();
        while self.is_word("wr") {
            self.next();
            levels.push(self.level()?);
        }
        Ok(ChainSpec { base, levels })
    }

    fn head_atom(&mut self) -> ParseResult<HeadAtom> {
        let pos = self.pos();
        if self.is_word("t") {
            self.next();
            if self.is_sym('^') {
                self.next();
                return Ok(HeadAtom::Shift(self.int()?));
            }
            return Ok(HeadAtom::Shift(1));
        }
        if self.is_word("e") {
            self.next();
            return Ok(HeadAtom::Identity);
        }
        if self.is_sym('(') {
            return Ok(HeadAtom::Cycles(self.cycles()?, pos));
        }
        self.expected("t, e or a permutation")
    }

    fn atom(&mut self) -> ParseResult<Expr> {
        let pos = self.pos();
        if self.is_sym('{') {
            self.next();
            let e = self.expr()?;
            self.sym('}')?;
            return Ok(e);
        }
        if self.is_sym('[') {
            self.next();
            let mut base = Vec::new();
            while !self.is_sym(']') {
                if !base.is_empty() {
                    self.sym(',')?;
                }
                let x = self.int()?;
                self.sym(':')?;
                let at = self.pos();
                base.push((x, self.cycles()?, at));
            }
            self.next();
            let head = if self.is_word("t") || self.is_word("e") || self.is_sym('(') {
                Some(self.head_atom()?)
            } else {
                None
            };
            return Ok(Expr::Element { base, head, pos });
        }
        Ok(Expr::Element {
            base: Vec::new(),
            head: Some(self.head_atom()?),
            pos,
        })
    }

    fn term(&mut self) -> ParseResult<Expr> {
        let a = self.atom()?;
        if self.is_sym('^') {
            self.next();
            return Ok(Expr::Pow(Box::new(a), self.int()?));
        }
        Ok(a)
    }

    fn expr(&mut self) -> ParseResult<Expr> {
        let mut e = self.term()?;
        while self.is_sym('*') {
            self.next();
            e = Expr::Mul(Box::new(e), Box::new(self.term()?));
        }
        Ok(e)
    }
}

fn parse_all<T>(src: &str, f: impl FnOnce(&mut Parser) -> ParseResult<T>) -> ParseResult<T> {
    let mut p = Parser::new(src)?;
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

// ----------------------------------------------------------------------
// groups

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Sym(usize),
    Alt(usize),
    Dihedral(usize),
    Klein4,
    Quaternion,
    Trivial,
    Perm { degree: usize, generators: Vec<Perm> },
}

impl GroupSpec {
    pub fn parse(src: &str) -> ParseResult<Self> {
        parse_all(src, Parser::group)
    }

    /// Order of a named group, when it can be computed without building it.
    fn named_order(&self) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            GroupSpec::Cyclic(n) => Some(n as u128),
            GroupSpec::Sym(n) => Some(fact(n)),
            GroupSpec::Alt(n) => Some(if n < 2 { 1 } else { fact(n) / 2 }),
            GroupSpec::Dihedral(n) => Some(2 * n as u128),
            GroupSpec::Klein4 => Some(4),
            GroupSpec::Quaternion => Some(8),
            GroupSpec::Trivial => Some(1),
            GroupSpec::Perm { .. } => None,
        }
    }

    /// Builds the group, refusing anything with more than `cap` elements.
    pub fn build(&self, cap: usize) -> invariable::Result<FiniteGroup> {
        if self.named_order().is_some_and(|n| n > cap as u128) {
            return Err(invariable::Error::TooLarge { what: "group", cap });
        }
        match self {
            GroupSpec::Cyclic(n) => named::cyclic(*n),
            GroupSpec::Sym(n) => named::symmetric(*n),
            GroupSpec::Alt(n) => named::alternating(*n),
            GroupSpec::Dihedral(n) => named::dihedral(*n),
            GroupSpec::Klein4 => Ok(named::klein4()),
            GroupSpec::Quaternion => Ok(named::quaternion()),
            GroupSpec::Trivial => named::cyclic(1),
            GroupSpec::Perm { generators, .. } => invariable::group::closure_with_cap(generators, cap),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupSpec::Sym(n) => write!(f, "sym {n}"),
            GroupSpec::Alt(n) => write!(f, "alt {n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral {n}"),
            GroupSpec::Klein4 => f.write_str("klein4"),
            GroupSpec::Quaternion => f.write_str("quaternion"),
            GroupSpec::Trivial => f.write_str("trivial"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "perm {degree}: ")?;
                write_perms(f, generators)
            }
        }
    }
}

fn write_perms(f: &mut fmt::Formatter<'_>, perms: &[Perm]) -> fmt::Result {
    for (i, p) in perms.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A comma-separated list of permutations of the given degree.
pub fn parse_perms(src: &str, degree: usize) -> ParseResult<Vec<Perm>> {
    parse_all(src, |p| p.perm_list(degree))
}

// ----------------------------------------------------------------------
// chains and actions

fn descriptor_text(d: &GroupDescriptor) -> String {
    let fg = if d.finitely_generated() { "fg" } else { "nfg" };
    format!("{{{}, {fg}}}", d.status())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Group(GroupSpec),
    Descriptor(GroupDescriptor),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeadSpec {
    Group(GroupSpec),
    Descriptor(GroupDescriptor),
    Int,
}

impl HeadSpec {
    /// `int` or a concrete group; descriptors are rejected.
    pub fn parse_concrete(src: &str) -> ParseResult<Self> {
        let head = parse_all(src, Parser::head)?;
        if let HeadSpec::Descriptor(_) = head {
            return Err(Pos { line: 1, column: 1 }.error("a concrete head group or int is needed here"));
        }
        Ok(head)
    }
}

impl fmt::Display for HeadSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadSpec::Group(g) => write!(f, "{g}"),
            HeadSpec::Descriptor(d) => f.write_str(&descriptor_text(d)),
            HeadSpec::Int => f.write_str("int"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionText {
    Natural,
    Regular,
    IntTranslation,
    /// Images of the head generators, in order, as permutations of `0..degree`.
    PermAction { degree: usize, images: Vec<Perm> },
    Flags(ActionDescriptor),
}

impl ActionText {
    pub fn parse(src: &str) -> ParseResult<Self> {
        parse_all(src, Parser::action)
    }

    /// The concrete action of `head`; flags and mismatched heads are errors.
    pub fn realise(&self, head: &HeadSpec, cap: usize) -> anyhow::Result<ActionSpec> {
        match (self, head) {
            (ActionText::IntTranslation, HeadSpec::Int) => Ok(ActionSpec::IntTranslation),
            (_, HeadSpec::Int) => anyhow::bail!("the head int only acts by int-translation"),
            (ActionText::Flags(_), _) => {
                anyhow::bail!("action flags describe an action but cannot be computed with")
            }
            (_, HeadSpec::Descriptor(_)) => {
                anyhow::bail!("{self} needs a concrete head group, not a descriptor")
            }
            (ActionText::IntTranslation, HeadSpec::Group(_)) => {
                anyhow::bail!("int-translation needs the head int")
            }
            (ActionText::Natural, HeadSpec::Group(g)) => Ok(ActionSpec::natural(g.build(cap)?)),
            (ActionText::Regular, HeadSpec::Group(g)) => {
                Ok(ActionSpec::Finite(FiniteAction::regular(&g.build(cap)?)?))
            }
            (ActionText::PermAction { images, .. }, HeadSpec::Group(g)) => Ok(ActionSpec::Finite(
                FiniteAction::from_generator_images(&g.build(cap)?, images)?,
            )),
        }
    }

    fn descriptor(&self, head: &HeadSpec, cap: usize) -> anyhow::Result<ActionDescriptor> {
        match (self, head) {
            (ActionText::Flags(d), _) => Ok(*d),
            (ActionText::IntTranslation, HeadSpec::Descriptor(_)) => Ok(ActionDescriptor::int_translation()),
            _ => Ok(self.realise(head, cap)?.descriptor()),
        }
    }
}

impl fmt::Display for ActionText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionText::Natural => f.write_str("natural"),
            ActionText::Regular => f.write_str("regular"),
            ActionText::IntTranslation => f.write_str("int-translation"),
            ActionText::PermAction { degree, images } => {
                write!(f, "perm-action {degree}: ")?;
                write_perms(f, images)
            }
            ActionText::Flags(d) => write!(
                f,
                "{{{}, {}}}",
                if d.torsion_type { "torsion-type" } else { "not-torsion" },
                if d.finitely_many_orbits { "finite-orbits" } else { "infinite-orbits" }
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LevelSpec {
    pub head: HeadSpec,
    pub action: ActionText,
    pos: Pos,
}

impl PartialEq for LevelSpec {
    fn eq(&self, other: &Self) -> bool {
        self.head == other.head && self.action == other.action
    }
}

impl Eq for LevelSpec {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    pub base: BaseSpec,
    pub levels: Vec<LevelSpec>,
}

impl ChainSpec {
    pub fn parse(src: &str) -> ParseResult<Self> {
        parse_all(src, Parser::chain)
    }

    /// Abstract descriptors for every level. Concrete finite groups are FIG
    /// and finitely generated; concrete actions report their own flags.
    pub fn descriptors(&self, cap: usize) -> anyhow::Result<Vec<ChainLevel>> {
        let base = match &self.base {
            BaseSpec::Group(g) => {
                g.build(cap)?;
                GroupDescriptor::finite()
            }
            BaseSpec::Descriptor(d) => *d,
        };
        let mut out = vec![ChainLevel { group: base, action: None }];
        for level in &self.levels {
            let group = match &level.head {
                HeadSpec::Group(g) => {
                    g.build(cap)?;
                    GroupDescriptor::finite()
                }
                HeadSpec::Descriptor(d) => *d,
                HeadSpec::Int => GroupDescriptor::integers(),
            };
            let action = level.action.descriptor(&level.head, cap).map_err(|e| {
                anyhow::anyhow!("line {}, column {}: {e}", level.pos.line, level.pos.column)
            })?;
            out.push(ChainLevel { group, action: Some(action) });
        }
        Ok(out)
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            BaseSpec::Group(g) => write!(f, "{g}")?,
            BaseSpec::Descriptor(d) => f.write_str(&descriptor_text(d))?,
        }
        for level in &self.levels {
            match (&level.head, &level.action) {
                (HeadSpec::Int, ActionText::IntTranslation) => f.write_str(" wr int-translation")?,
                (h, a) => write!(f, " wr ({h}, {a})")?,
            }
        }
        Ok(())
    }
}

// ----------------------------------------------------------------------
// wreath elements

#[derive(Clone, Debug, PartialEq, Eq)]
enum HeadAtom {
    Shift(i64),
    Identity,
    Cycles(Vec<Vec<u32>>, Pos),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Element {
        base: Vec<(i64, Vec<Vec<u32>>, Pos)>,
        head: Option<HeadAtom>,
        pos: Pos,
    },
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// A parsed element expression, evaluated against a specific ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementExpr(Expr);

impl ElementExpr {
    pub fn parse(src: &str) -> ParseResult<Self> {
        parse_all(src, Parser::expr).map(ElementExpr)
    }

    pub fn eval(&self, w: &Wreath) -> anyhow::Result<WreathElement> {
        eval(&self.0, w)
    }
}

fn at(pos: Pos, e: impl fmt::Display) -> anyhow::Error {
    anyhow::anyhow!("line {}, column {}: {e}", pos.line, pos.column)
}

fn eval_head(h: &HeadAtom, w: &Wreath) -> anyhow::Result<HeadElement> {
    let action = w.action();
    match (h, action) {
        (HeadAtom::Identity, _) => Ok(action.head_identity()),
        (HeadAtom::Shift(s), ActionSpec::IntTranslation) => Ok(HeadElement::Shift(*s)),
        (HeadAtom::Shift(_), ActionSpec::Finite(_)) => {
            anyhow::bail!("t only exists when the head is int")
        }
        (HeadAtom::Cycles(_, pos), ActionSpec::IntTranslation) => {
            Err(at(*pos, "the head is int; write t^k instead of a permutation"))
        }
        (HeadAtom::Cycles(c, pos), ActionSpec::Finite(a)) => {
            let p = Perm::from_cycles(a.points(), c).map_err(|e| at(*pos, e))?;
            let h = HeadElement::Perm(p);
            action.check_head(&h).map_err(|e| at(*pos, e))?;
            Ok(h)
        }
    }
}

fn eval(e: &Expr, w: &Wreath) -> anyhow::Result<WreathElement> {
    match e {
        Expr::Element { base, head, pos } => {
            let mut tuple = BaseTuple::new();
            for (x, cycles, p) in base {
                let g = Perm::from_cycles(w.base_group().degree(), cycles).map_err(|e| at(*p, e))?;
                if tuple.insert(*x as Point, g).is_some() {
                    return Err(at(*p, format!("coordinate {x} given twice")));
                }
            }
            let head = match head {
                Some(h) => eval_head(h, w)?,
                None => w.action().head_identity(),
            };
            w.element(tuple, head).map_err(|e| at(*pos, e))
        }
        Expr::Mul(a, b) => Ok(w.mul(&eval(a, w)?, &eval(b, w)?)?),
        Expr::Pow(a, k) => Ok(w.pow(&eval(a, w)?, *k)?),
    }
}
