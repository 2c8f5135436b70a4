//! Syntax tree of `.lk` scripts and its canonical printer.

use std::fmt;

/// Source position (1-based). Positions never take part in equality, so
/// a printed and reparsed script compares equal to the original.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

/// Polynomial source text, parsed once the ring is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyText {
    pub text: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(String, Pos),
    Int(i64),
    /// `(f, g, ...)`; `()` is the zero ideal.
    Ideal(Vec<PolyText>),
    /// `[[a, b], [c, d]]`, listed by rows.
    Matrix(Vec<Vec<PolyText>>),
    Call(String, Vec<Expr>, Pos),
    /// `R / I`, the cyclic module `R/I`.
    Quot(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub vars: Vec<String>,
    pub degrees: Option<Vec<i32>>,
    pub prime: Option<u32>,
    pub relations: Vec<PolyText>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OptValue {
    Int(u64),
    Bool(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring(RingDecl),
    Ideal { name: String, expr: Expr },
    Module { name: String, expr: Expr },
    Use(String),
    Set { key: String, value: OptValue },
    Check { negated: bool, name: String, args: Vec<Expr> },
    Show(Expr),
    /// Checks and `show` commands that may run concurrently.
    Par(Vec<Statement>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub pos: Pos,
    pub stmt: Stmt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl Script {
    /// Counts of `(rings, ideals, modules, checks)`, including checks inside
    /// `par` blocks.
    pub fn census(&self) -> (usize, usize, usize, usize) {
        fn walk(s: &[Statement], c: &mut (usize, usize, usize, usize)) {
            for st in s {
                match &st.stmt {
                    Stmt::Ring(_) => c.0 += 1,
                    Stmt::Ideal { .. } => c.1 += 1,
                    Stmt::Module { .. } => c.2 += 1,
                    Stmt::Check { .. } => c.3 += 1,
                    Stmt::Par(body) => walk(body, c),
                    _ => {}
                }
            }
        }
        let mut c = (0, 0, 0, 0);
        walk(&self.statements, &mut c);
        c
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for PolyText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n, _) => f.write_str(n),
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Ideal(gens) => write!(f, "({})", join(gens)),
            Expr::Matrix(rows) => {
                let r: Vec<String> = rows.iter().map(|row| format!("[{}]", join(row))).collect();
                write!(f, "[{}]", r.join(", "))
            }
            Expr::Call(name, args, _) => write!(f, "{name}({})", join(args)),
            Expr::Quot(a, b) => write!(f, "{a}/{b}"),
        }
    }
}

impl fmt::Display for OptValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptValue::Int(v) => write!(f, "{v}"),
            OptValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {} = poly(vars {}", self.name, self.vars.join(", "))?;
        if let Some(d) = &self.degrees {
            write!(f, "; degrees {}", join(d))?;
        }
        if let Some(p) = self.prime {
            write!(f, "; p={p}")?;
        }
        f.write_str(")")?;
        if !self.relations.is_empty() {
            write!(f, " / ideal({})", join(&self.relations))?;
        }
        f.write_str(";")
    }
}

impl Statement {
    fn write(&self, f: &mut fmt::Formatter<'_>, indent: &str) -> fmt::Result {
        f.write_str(indent)?;
        match &self.stmt {
            Stmt::Ring(r) => write!(f, "{r}"),
            Stmt::Ideal { name, expr } => write!(f, "ideal {name} = {expr};"),
            Stmt::Module { name, expr } => write!(f, "module {name} = {expr};"),
            Stmt::Use(n) => write!(f, "use {n};"),
            Stmt::Set { key, value } => write!(f, "set {key} = {value};"),
            Stmt::Check { negated, name, args } => {
                let not = if *negated { "not " } else { "" };
                write!(f, "{not}{name}({});", join(args))
            }
            Stmt::Show(e) => write!(f, "show {e};"),
            Stmt::Par(body) => {
                writeln!(f, "par {{")?;
                for s in body {
                    s.write(f, "  ")?;
                    writeln!(f)?;
                }
                write!(f, "{indent}}}")
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, "")
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
