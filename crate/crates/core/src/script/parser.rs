//! Recursive-descent parser with name, ring and type resolution.

use std::collections::HashMap;

use super::ast::{Expr, OptValue, PolyText, Pos, RingDecl, Script, Statement, Stmt};
use super::builtins::{is_reserved, lookup, word_type, Arg, Ty, OPTIONS};
use crate::arith::{MonomialOrder, PolyRing, PrimeField, DEFAULT_PRIME};
use crate::error::{Error, Result};

fn err(pos: Pos, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        col: pos.col,
        msg: msg.into(),
    }
}

struct Cursor {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        Cursor {
            chars: text.chars().collect(),
            i: 0,
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.i + 1).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Skips whitespace and `#` or `//` comments.
    fn skip(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => self.skip_line(),
                Some('/') if self.peek2() == Some('/') => self.skip_line(),
                _ => return,
            }
        }
    }

    fn skip_line(&mut self) {
        while let Some(c) = self.bump() {
            if c == '\n' {
                return;
            }
        }
    }

    fn describe_next(&mut self) -> String {
        self.skip();
        match self.peek() {
            None => "end of input".into(),
            Some(c) => format!("{c:?}"),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip();
        let pos = self.pos();
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.describe_next();
            Err(err(pos, format!("expected {c:?}, found {found}")))
        }
    }

    fn at_ident(&mut self) -> bool {
        self.skip();
        matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_')
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        self.skip();
        let pos = self.pos();
        if !self.at_ident() {
            let found = self.describe_next();
            return Err(err(pos, format!("expected a name, found {found}")));
        }
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok((s, pos))
    }

    /// Consumes `kw` if the next name is exactly `kw`.
    fn keyword(&mut self, kw: &str) -> bool {
        self.skip();
        let save = (self.i, self.line, self.col);
        if self.at_ident() {
            if let Ok((s, _)) = self.ident() {
                if s == kw {
                    return true;
                }
            }
        }
        (self.i, self.line, self.col) = save;
        false
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        self.skip();
        let pos = self.pos();
        if self.keyword(kw) {
            Ok(())
        } else {
            let found = self.describe_next();
            Err(err(pos, format!("expected `{kw}`, found {found}")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip();
        let pos = self.pos();
        let neg = self.eat('-');
        self.skip();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if s.is_empty() {
            let found = self.describe_next();
            return Err(err(pos, format!("expected an integer, found {found}")));
        }
        let v: i64 = s.parse().map_err(|_| err(pos, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// Raw text up to a `,` or `close` outside parentheses.
    fn raw_item(&mut self, close: char) -> Result<PolyText> {
        self.skip();
        let pos = self.pos();
        let mut depth = 0usize;
        let mut s = String::new();
        loop {
            let here = self.pos();
            match self.peek() {
                None => return Err(err(here, format!("expected {close:?}, found end of input"))),
                Some(';') | Some('{') | Some('}') => {
                    return Err(err(here, format!("expected {close:?}, found {:?}", self.peek().unwrap())))
                }
                Some('(') => depth += 1,
                Some(')') if depth > 0 => depth -= 1,
                Some(c) if depth == 0 && (c == ',' || c == close) => break,
                Some(')') | Some(']') | Some('[') => {
                    return Err(err(here, format!("unexpected {:?}", self.peek().unwrap())))
                }
                _ => {}
            }
            s.push(self.bump().unwrap());
        }
        let text = s.trim().to_string();
        if text.is_empty() {
            return Err(err(pos, "expected a polynomial"));
        }
        Ok(PolyText { text, pos })
    }

    /// Items separated by commas and terminated by `close`; the opening
    /// bracket is already consumed.
    fn raw_list(&mut self, close: char) -> Result<Vec<PolyText>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.raw_item(close)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }
}

fn parse_atom(c: &mut Cursor) -> Result<Expr> {
    c.skip();
    let pos = c.pos();
    match c.peek() {
        Some('(') => {
            c.bump();
            Ok(Expr::Ideal(c.raw_list(')')?))
        }
        Some('[') => {
            c.bump();
            parse_matrix_rows(c)
        }
        Some(ch) if ch.is_ascii_digit() || ch == '-' => Ok(Expr::Int(c.int()?)),
        Some(_) if c.at_ident() => {
            let (name, pos) = c.ident()?;
            c.skip();
            match c.peek() {
                Some('(') => {
                    c.bump();
                    let args = parse_args(c)?;
                    Ok(Expr::Call(name, args, pos))
                }
                Some('[') if name == "coker" => {
                    c.bump();
                    Ok(Expr::Call(name, vec![parse_matrix_rows(c)?], pos))
                }
                _ if (name == "quotient" || name == "ideal_as_module") && c.at_ident() => {
                    let (arg, apos) = c.ident()?;
                    Ok(Expr::Call(name, vec![Expr::Name(arg, apos)], pos))
                }
                _ => Ok(Expr::Name(name, pos)),
            }
        }
        _ => {
            let found = c.describe_next();
            Err(err(pos, format!("expected an expression, found {found}")))
        }
    }
}

fn parse_matrix_rows(c: &mut Cursor) -> Result<Expr> {
    let mut rows = Vec::new();
    if c.eat(']') {
        return Ok(Expr::Matrix(rows));
    }
    loop {
        c.expect('[')?;
        rows.push(c.raw_list(']')?);
        if c.eat(']') {
            return Ok(Expr::Matrix(rows));
        }
        c.expect(',')?;
    }
}

fn parse_args(c: &mut Cursor) -> Result<Vec<Expr>> {
    let mut args = Vec::new();
    if c.eat(')') {
        return Ok(args);
    }
    loop {
        args.push(parse_expr(c)?);
        if c.eat(')') {
            return Ok(args);
        }
        c.expect(',')?;
    }
}

fn parse_expr(c: &mut Cursor) -> Result<Expr> {
    let a = parse_atom(c)?;
    c.skip();
    if c.peek() == Some('/') && c.peek2() != Some('/') {
        c.bump();
        let b = parse_atom(c)?;
        return Ok(Expr::Quot(Box::new(a), Box::new(b)));
    }
    Ok(a)
}

fn parse_ring(c: &mut Cursor) -> Result<RingDecl> {
    let (name, _) = c.ident()?;
    c.expect('=')?;
    c.expect_keyword("poly")?;
    c.expect('(')?;
    c.expect_keyword("vars")?;
    let mut vars = vec![c.ident()?.0];
    while c.eat(',') {
        vars.push(c.ident()?.0);
    }
    let mut degrees = None;
    let mut prime = None;
    while c.eat(';') {
        c.skip();
        let pos = c.pos();
        if c.keyword("degrees") {
            let mut d = vec![c.int()? as i32];
            while c.eat(',') {
                d.push(c.int()? as i32);
            }
            degrees = Some(d);
        } else if c.keyword("p") {
            c.expect('=')?;
            let p = c.int()?;
            prime = Some(u32::try_from(p).map_err(|_| err(pos, "prime out of range"))?);
        } else {
            let found = c.describe_next();
            return Err(err(pos, format!("expected `degrees` or `p`, found {found}")));
        }
    }
    c.expect(')')?;
    let mut relations = Vec::new();
    if c.eat('/') {
        c.expect_keyword("ideal")?;
        c.expect('(')?;
        relations = c.raw_list(')')?;
    }
    c.expect(';')?;
    Ok(RingDecl {
        name,
        vars,
        degrees,
        prime,
        relations,
    })
}

fn parse_statement(c: &mut Cursor, in_par: bool) -> Result<Statement> {
    c.skip();
    let pos = c.pos();
    let (word, wpos) = c.ident()?;
    let decl_allowed = |what: &str| -> Result<()> {
        if in_par {
            Err(err(wpos, format!("`{what}` is not allowed inside `par`")))
        } else {
            Ok(())
        }
    };
    let stmt = match word.as_str() {
        "ring" => {
            decl_allowed("ring")?;
            Stmt::Ring(parse_ring(c)?)
        }
        "ideal" | "module" => {
            decl_allowed(&word)?;
            let (name, _) = c.ident()?;
            c.expect('=')?;
            let expr = parse_expr(c)?;
            c.expect(';')?;
            if word == "ideal" {
                Stmt::Ideal { name, expr }
            } else {
                Stmt::Module { name, expr }
            }
        }
        "use" => {
            decl_allowed("use")?;
            let (name, _) = c.ident()?;
            c.expect(';')?;
            Stmt::Use(name)
        }
        "set" => {
            decl_allowed("set")?;
            let (key, kpos) = c.ident()?;
            if !OPTIONS.contains(&key.as_str()) {
                return Err(err(kpos, format!("unknown option `{key}`")));
            }
            c.expect('=')?;
            let value = if c.keyword("true") {
                OptValue::Bool(true)
            } else if c.keyword("false") {
                OptValue::Bool(false)
            } else {
                c.skip();
                let vpos = c.pos();
                let v = c.int()?;
                OptValue::Int(u64::try_from(v).map_err(|_| err(vpos, "option value must be nonnegative"))?)
            };
            c.expect(';')?;
            Stmt::Set { key, value }
        }
        "show" => {
            let e = parse_expr(c)?;
            c.expect(';')?;
            Stmt::Show(e)
        }
        "par" => {
            decl_allowed("par")?;
            c.expect('{')?;
            let mut body = Vec::new();
            while !c.eat('}') {
                if c.peek().is_none() {
                    return Err(err(c.pos(), "expected '}', found end of input"));
                }
                body.push(parse_statement(c, true)?);
            }
            Stmt::Par(body)
        }
        _ => {
            let (negated, name, npos) = if word == "not" {
                let (n, p) = c.ident()?;
                (true, n, p)
            } else {
                (false, word.clone(), wpos)
            };
            match lookup(&name) {
                Some(s) if s.ret == Ty::Check => {}
                _ => return Err(err(npos, format!("unknown statement or check `{name}`"))),
            }
            c.expect('(')?;
            let args = parse_args(c)?;
            c.expect(';')?;
            Stmt::Check { negated, name, args }
        }
    };
    Ok(Statement { pos, stmt })
}

/// Parses and resolves a script.
pub fn parse_script(text: &str) -> Result<Script> {
    let mut c = Cursor::new(text);
    let mut statements = Vec::new();
    loop {
        c.skip();
        if c.peek().is_none() {
            break;
        }
        statements.push(parse_statement(&mut c, false)?);
    }
    let script = Script { statements };
    Resolver::default().script(&script)?;
    Ok(script)
}

/// Declared name: its kind and the ring it lives over.
#[derive(Clone)]
struct Symbol {
    ty: Ty,
    ring: String,
}

#[derive(Default)]
struct Resolver {
    symbols: HashMap<String, Symbol>,
    syntax: HashMap<String, PolyRing>,
    active: Option<String>,
}

impl Resolver {
    fn script(mut self, s: &Script) -> Result<()> {
        for st in &s.statements {
            self.statement(st)?;
        }
        Ok(())
    }

    fn declare(&mut self, name: &str, pos: Pos, sym: Symbol) -> Result<()> {
        if is_reserved(name) {
            return Err(err(pos, format!("`{name}` is a reserved word")));
        }
        if self.symbols.contains_key(name) {
            return Err(err(pos, format!("`{name}` is already declared")));
        }
        self.symbols.insert(name.to_string(), sym);
        Ok(())
    }

    fn active(&self, pos: Pos) -> Result<String> {
        self.active
            .clone()
            .ok_or_else(|| err(pos, "no ring declared before this statement"))
    }

    fn statement(&mut self, st: &Statement) -> Result<()> {
        let pos = st.pos;
        match &st.stmt {
            Stmt::Ring(r) => {
                let n = r.vars.len();
                let weights = r.degrees.clone().unwrap_or_else(|| vec![1; n]);
                if weights.len() != n {
                    return Err(err(pos, format!("{n} variables but {} degrees", weights.len())));
                }
                if weights.iter().any(|&w| w <= 0) {
                    return Err(err(pos, "variable degrees must be positive"));
                }
                let p = r.prime.unwrap_or(DEFAULT_PRIME);
                let field = PrimeField::new(p).map_err(|e| err(pos, e.to_string()))?;
                let ring = PolyRing::new(r.vars.clone(), weights, field, MonomialOrder::Grevlex)
                    .map_err(|e| err(pos, e.to_string()))?;
                for f in &r.relations {
                    ring.parse_at(&f.text, f.pos.line, f.pos.col)?;
                }
                self.declare(
                    &r.name,
                    pos,
                    Symbol {
                        ty: Ty::Ring,
                        ring: r.name.clone(),
                    },
                )?;
                self.syntax.insert(r.name.clone(), ring);
                self.active = Some(r.name.clone());
            }
            Stmt::Ideal { name, expr } | Stmt::Module { name, expr } => {
                let ring = self.active(pos)?;
                let (ty, r) = self.expr(expr, pos)?;
                let want = if matches!(st.stmt, Stmt::Ideal { .. }) {
                    Ty::Ideal
                } else {
                    Ty::Module
                };
                if ty != want {
                    return Err(err(pos, format!("expected {want}, found {ty}")));
                }
                let ring = r.unwrap_or(ring);
                self.declare(name, pos, Symbol { ty, ring })?;
            }
            Stmt::Use(name) => match self.symbols.get(name) {
                Some(s) if s.ty == Ty::Ring => self.active = Some(name.clone()),
                Some(_) => return Err(err(pos, format!("`{name}` is not a ring"))),
                None => return Err(err(pos, format!("`{name}` is not declared"))),
            },
            Stmt::Set { .. } => {}
            Stmt::Check { name, args, .. } => {
                self.active(pos)?;
                let call = Expr::Call(name.clone(), args.clone(), pos);
                self.expr(&call, pos)?;
            }
            Stmt::Show(e) => {
                self.active(pos)?;
                let (ty, _) = self.expr(e, pos)?;
                if ty == Ty::Selector || ty == Ty::Ring {
                    return Err(err(pos, format!("cannot show a {ty}")));
                }
            }
            Stmt::Par(body) => {
                for s in body {
                    self.statement(s)?;
                }
            }
        }
        Ok(())
    }

    fn merge(pos: Pos, a: Option<String>, b: Option<String>) -> Result<Option<String>> {
        match (a, b) {
            (Some(x), Some(y)) if x != y => Err(err(
                pos,
                format!("ring mismatch: objects over `{x}` and `{y}`"),
            )),
            (Some(x), _) | (None, Some(x)) => Ok(Some(x)),
            (None, None) => Ok(None),
        }
    }

    fn polys(&self, items: &[PolyText], pos: Pos) -> Result<()> {
        let ring = self.active(pos)?;
        let pr = &self.syntax[&ring];
        for f in items {
            pr.parse_at(&f.text, f.pos.line, f.pos.col)?;
        }
        Ok(())
    }

    /// Type of an expression and the ring of the names it references.
    fn expr(&self, e: &Expr, at: Pos) -> Result<(Ty, Option<String>)> {
        match e {
            Expr::Int(_) => Ok((Ty::Int, None)),
            Expr::Name(n, pos) => {
                if let Some(s) = self.symbols.get(n) {
                    return Ok((s.ty, Some(s.ring.clone())));
                }
                if let Some(t) = word_type(n) {
                    return Ok((t, None));
                }
                Err(err(*pos, format!("`{n}` is not declared")))
            }
            Expr::Ideal(items) => {
                self.polys(items, at)?;
                Ok((Ty::Ideal, Some(self.active(at)?)))
            }
            Expr::Matrix(rows) => {
                for r in rows {
                    self.polys(r, at)?;
                }
                if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
                    return Err(err(at, "matrix rows have different lengths"));
                }
                Ok((Ty::Matrix, Some(self.active(at)?)))
            }
            Expr::Quot(a, b) => {
                let (ta, ra) = self.expr(a, at)?;
                let (tb, rb) = self.expr(b, at)?;
                if ta != Ty::Ring || tb != Ty::Ideal {
                    return Err(err(at, format!("`/` expects ring / ideal, found {ta} / {tb}")));
                }
                Ok((Ty::Module, Self::merge(at, ra, rb)?))
            }
            Expr::Call(name, args, pos) => {
                let sig = lookup(name).ok_or_else(|| err(*pos, format!("unknown function `{name}`")))?;
                let min = sig.args.len() - sig.optional;
                let max = if sig.variadic { usize::MAX } else { sig.args.len() };
                if args.len() < min || args.len() > max {
                    let expect = if min == sig.args.len() {
                        format!("{min}")
                    } else {
                        format!("{min} to {}", sig.args.len())
                    };
                    return Err(err(
                        *pos,
                        format!("`{name}` takes {expect} arguments, found {}", args.len()),
                    ));
                }
                let mut ring = None;
                let mut tys = Vec::new();
                for (k, a) in args.iter().enumerate() {
                    let (t, r) = self.expr(a, *pos)?;
                    let spec = *sig.args.get(k).or(sig.args.last()).unwrap_or(&Arg::Any);
                    if !spec.accepts(t) {
                        return Err(err(
                            *pos,
                            format!("argument {} of `{name}` must be a {spec}, found {t}", k + 1),
                        ));
                    }
                    tys.push(t);
                    ring = Self::merge(*pos, ring, r)?;
                }
                if name == "eq" && !comparable(tys[0], tys[1]) {
                    return Err(err(*pos, format!("cannot compare {} with {}", tys[0], tys[1])));
                }
                if ring.is_none() && matches!(sig.ret, Ty::Module | Ty::Ideal) {
                    ring = Some(self.active(*pos)?);
                }
                Ok((sig.ret, ring))
            }
        }
    }
}

fn comparable(a: Ty, b: Ty) -> bool {
    let num = |t| matches!(t, Ty::Int | Ty::Dim);
    (num(a) && num(b))
        || (a == b && matches!(a, Ty::Ideal | Ty::Module))
        || (a == Ty::Module && b == Ty::Int)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_declaration() {
        let s = parse_script("ring R = poly(vars x,y; p=32003);").unwrap();
        assert_eq!(s.census(), (1, 0, 0, 0));
    }

    #[test]
    fn syntax_error_position() {
        let e = parse_script("ring R = poly(vars x, z);\nideal I = (x, z;").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                col: 16,
                msg: "expected ')', found ';'".into()
            }
        );
    }

    #[test]
    fn resolution_errors() {
        let e = parse_script("ring R = poly(vars x);\nis_zero(M);").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col: 9, .. }), "{e}");
        let e = parse_script(
            "ring R = poly(vars x);\nideal I = (x);\nring S = poly(vars x);\nideal J = (x);\nsubset(I, J);",
        )
        .unwrap_err();
        assert!(e.to_string().contains("ring mismatch"), "{e}");
        let e = parse_script("ring R = poly(vars x);\nideal I = (y);").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_script("ring R = poly(vars x);\nis_free((x));").unwrap_err();
        assert!(e.to_string().contains("must be a module"), "{e}");
    }

    #[test]
    fn round_trip() {
        let text = "ring R = poly(vars x, y; degrees 1, 2) / ideal(x^2, y*x^2);\n\
                    ideal I = (x);\nmodule M = coker [[x, y], [0, x^2]];\nmodule N = quotient I;\n\
                    set bound = 4;\npar {\n  is_zero(tor(1, R/I, N));\n  show betti(M);\n}\n\
                    not is_free(M);\ndepth_scan(residue_field(), pd, 2);\n";
        let s = parse_script(text).unwrap();
        let printed = s.to_string();
        assert_eq!(parse_script(&printed).unwrap(), s);
        assert_eq!(s.census(), (1, 1, 2, 3));
    }
}
