//! Parser and printer for the `.geo` construction/statement format.
//!
//! One declaration per line, `#` comments, and exactly one `Prove(...)` or
//! `ProveDetails(...)` directive:
//!
//! ```text
//! A = Point()
//! B = Point()
//! c = Circle(A, B)
//! D = Point(c)
//! Prove(AreCongruent(s1, s2))
//! ```

use std::fmt;

use thiserror::Error;

use crate::geomodel::{
    Angle, Construction, Formula, GeoModelError, ObjId, ProofMode, Statement, ToolApp,
};
use crate::{rat, rint, Rat};

#[derive(Error, Debug, Clone, PartialEq)]
#[error("{message} at line {line}, column {col}")]
pub struct DslError {
    pub message: String,
    pub line: usize,
    pub col: usize,
}

impl DslError {
    fn new(message: impl Into<String>, line: usize, col: usize) -> Self {
        DslError {
            message: message.into(),
            line,
            col,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    LPar,
    RPar,
    Comma,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LPar => write!(f, "`(`"),
            Tok::RPar => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Sp {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex_line(text: &str, line_no: usize) -> Result<Vec<Sp>, DslError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '(' => {
                out.push(Sp { tok: Tok::LPar, line: line_no, col });
                i += 1;
            }
            ')' => {
                out.push(Sp { tok: Tok::RPar, line: line_no, col });
                i += 1;
            }
            ',' => {
                out.push(Sp { tok: Tok::Comma, line: line_no, col });
                i += 1;
            }
            '=' => {
                out.push(Sp { tok: Tok::Eq, line: line_no, col });
                i += 1;
            }
            '+' => {
                out.push(Sp { tok: Tok::Plus, line: line_no, col });
                i += 1;
            }
            '-' => {
                out.push(Sp { tok: Tok::Minus, line: line_no, col });
                i += 1;
            }
            '*' => {
                out.push(Sp { tok: Tok::Star, line: line_no, col });
                i += 1;
            }
            '/' => {
                out.push(Sp { tok: Tok::Slash, line: line_no, col });
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n: i64 = s
                    .parse()
                    .map_err(|_| DslError::new("integer literal too large", line_no, col))?;
                out.push(Sp { tok: Tok::Int(n), line: line_no, col });
            }
            _ if c.is_alphabetic() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '\'' || chars[i] == '_')
                {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Sp { tok: Tok::Ident(s), line: line_no, col });
            }
            _ => {
                return Err(DslError::new(
                    format!("unexpected character `{c}`"),
                    line_no,
                    col,
                ))
            }
        }
    }
    Ok(out)
}

struct LineParser<'c> {
    toks: Vec<Sp>,
    pos: usize,
    line: usize,
    cons: &'c Construction,
}

impl<'c> LineParser<'c> {
    fn err_here(&self, msg: impl Into<String>) -> DslError {
        let (line, col) = match self.toks.get(self.pos) {
            Some(sp) => (sp.line, sp.col),
            None => (
                self.line,
                self.toks.last().map(|s| s.col + 1).unwrap_or(1),
            ),
        };
        DslError::new(msg, line, col)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn next(&mut self) -> Option<Sp> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), DslError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(self.err_here(format!("expected {want}, found {t}"))),
            None => Err(self.err_here(format!("expected {want}"))),
        }
    }

    fn ident(&mut self) -> Result<String, DslError> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            Some(t) => Err(self.err_here(format!("expected identifier, found {t}"))),
            None => Err(self.err_here("expected identifier")),
        }
    }

    fn object(&mut self) -> Result<ObjId, DslError> {
        let at = self.pos;
        let name = self.ident()?;
        self.cons.lookup(&name).ok_or_else(|| {
            let sp = &self.toks[at];
            DslError::new(format!("unknown object {name}"), sp.line, sp.col)
        })
    }

    fn int(&mut self) -> Result<i64, DslError> {
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.pos += 1;
        }
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(if neg { -n } else { n })
            }
            Some(t) => Err(self.err_here(format!("expected integer, found {t}"))),
            None => Err(self.err_here("expected integer")),
        }
    }

    fn end(&self) -> Result<(), DslError> {
        if self.pos != self.toks.len() {
            return Err(self.err_here("trailing tokens"));
        }
        Ok(())
    }

    fn objects_until_rpar(&mut self) -> Result<Vec<ObjId>, DslError> {
        let mut out = Vec::new();
        if matches!(self.peek(), Some(Tok::RPar)) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.object()?);
            match self.next() {
                Some(Sp { tok: Tok::Comma, .. }) => continue,
                Some(Sp { tok: Tok::RPar, .. }) => break,
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(self.err_here("expected `,` or `)`"));
                }
            }
        }
        Ok(out)
    }

    fn formula(&mut self) -> Result<Formula, DslError> {
        let mut acc = self.formula_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.formula_term()?;
                    acc = Formula::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.formula_term()?;
                    acc = Formula::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn formula_term(&mut self) -> Result<Formula, DslError> {
        let mut acc = self.formula_unary()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            let rhs = self.formula_unary()?;
            acc = Formula::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn formula_unary(&mut self) -> Result<Formula, DslError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            // a minus sign directly on a literal makes a negative constant
            if let Some(Tok::Int(_)) = self.toks.get(self.pos + 1).map(|s| &s.tok) {
                let n = self.int()?;
                return Ok(Formula::Const(self.maybe_fraction(n)?));
            }
            self.pos += 1;
            let inner = self.formula_unary()?;
            return Ok(Formula::Neg(Box::new(inner)));
        }
        self.formula_atom()
    }

    fn maybe_fraction(&mut self, n: i64) -> Result<Rat, DslError> {
        if matches!(self.peek(), Some(Tok::Slash)) {
            self.pos += 1;
            let d = self.int()?;
            if d == 0 {
                return Err(self.err_here("zero denominator"));
            }
            Ok(rat(n, d))
        } else {
            Ok(rint(n))
        }
    }

    fn formula_atom(&mut self) -> Result<Formula, DslError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Formula::Const(self.maybe_fraction(n)?))
            }
            Some(Tok::LPar) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RPar)?;
                Ok(f)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.expect(Tok::LPar)?;
                match name.as_str() {
                    "Dist2" => {
                        let a = self.object()?;
                        self.expect(Tok::Comma)?;
                        let b = self.object()?;
                        self.expect(Tok::RPar)?;
                        Ok(Formula::Dist2(a, b))
                    }
                    "Length" => {
                        let a = self.object()?;
                        self.expect(Tok::Comma)?;
                        let b = self.object()?;
                        self.expect(Tok::RPar)?;
                        Ok(Formula::Length(a, b))
                    }
                    "SignedArea2" => {
                        let vs = self.objects_until_rpar()?;
                        if vs.len() < 3 {
                            return Err(self.err_here("SignedArea2 needs at least 3 points"));
                        }
                        Ok(Formula::SignedArea2(vs))
                    }
                    other => Err(self.err_here(format!("unknown function `{other}`"))),
                }
            }
            Some(t) => Err(self.err_here(format!("expected formula, found {t}"))),
            None => Err(self.err_here("expected formula")),
        }
    }

    fn statement(&mut self) -> Result<Statement, DslError> {
        let at = self.pos;
        let name = self.ident()?;
        self.expect(Tok::LPar)?;
        let stmt = match name.as_str() {
            "AreCollinear" => {
                let a = self.args3()?;
                Statement::AreCollinear(a[0], a[1], a[2])
            }
            "AreConcurrent" => {
                let a = self.args3()?;
                Statement::AreConcurrent(a[0], a[1], a[2])
            }
            "AreConcyclic" => {
                let a = self.argsn(4)?;
                Statement::AreConcyclic(a[0], a[1], a[2], a[3])
            }
            "AreCongruent" => {
                let a = self.argsn(2)?;
                Statement::AreCongruent(a[0], a[1])
            }
            "AreEqual" => {
                let a = self.argsn(2)?;
                Statement::AreEqual(a[0], a[1])
            }
            "AreParallel" => {
                let a = self.argsn(2)?;
                Statement::AreParallel(a[0], a[1])
            }
            "ArePerpendicular" => {
                let a = self.argsn(2)?;
                Statement::ArePerpendicular(a[0], a[1])
            }
            "Incident" => {
                let a = self.argsn(2)?;
                Statement::Incident(a[0], a[1])
            }
            "EqualAngles" => {
                let a = self.argsn(6)?;
                Statement::EqualAngles([a[0], a[1], a[2], a[3], a[4], a[5]])
            }
            "Equation" => {
                let lhs = self.formula()?;
                self.expect(Tok::Comma)?;
                let rhs = self.formula()?;
                self.expect(Tok::RPar)?;
                Statement::Equation(lhs, rhs)
            }
            other => {
                let sp = &self.toks[at];
                return Err(DslError::new(
                    format!("unknown statement `{other}`"),
                    sp.line,
                    sp.col,
                ));
            }
        };
        Ok(stmt)
    }

    fn args3(&mut self) -> Result<Vec<ObjId>, DslError> {
        self.argsn(3)
    }

    fn argsn(&mut self, n: usize) -> Result<Vec<ObjId>, DslError> {
        let args = self.objects_until_rpar()?;
        if args.len() != n {
            return Err(self.err_here(format!("expected {n} arguments, got {}", args.len())));
        }
        Ok(args)
    }
}

/// A parsed source file: the construction, the statement to decide and the
/// requested mode.
#[derive(Clone, Debug)]
pub struct ParsedFile {
    pub construction: Construction,
    pub statement: Statement,
    pub mode: ProofMode,
}

fn model_error(e: GeoModelError, line: usize) -> DslError {
    DslError::new(e.to_string(), line, 1)
}

/// Parse a `.geo` source file.
pub fn parse_construction(text: &str) -> Result<ParsedFile, DslError> {
    let mut cons = Construction::new();
    let mut statement: Option<(Statement, ProofMode)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = lex_line(raw, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let mut p = LineParser {
            toks,
            pos: 0,
            line: line_no,
            cons: &cons,
        };
        let head = p.ident()?;
        if head == "Prove" || head == "ProveDetails" {
            if statement.is_some() {
                return Err(DslError::new("multiple Prove directives", line_no, 1));
            }
            let mode = if head == "Prove" {
                ProofMode::Prove
            } else {
                ProofMode::ProveDetails
            };
            p.expect(Tok::LPar)?;
            let stmt = p.statement()?;
            p.expect(Tok::RPar)?;
            p.end()?;
            statement = Some((stmt, mode));
            continue;
        }
        if statement.is_some() {
            return Err(DslError::new(
                "declarations after the Prove directive",
                line_no,
                1,
            ));
        }
        let name = head;
        p.expect(Tok::Eq)?;
        let tool_at = p.pos;
        let tool_name = p.ident()?;
        p.expect(Tok::LPar)?;
        let tool = parse_tool(&mut p, &tool_name, tool_at)?;
        p.end()?;
        drop(p);
        cons.append(&name, tool).map_err(|e| model_error(e, line_no))?;
    }
    let (statement, mode) = statement.ok_or_else(|| {
        let last = text.lines().count().max(1);
        DslError::new("missing Prove directive", last, 1)
    })?;
    Ok(ParsedFile {
        construction: cons,
        statement,
        mode,
    })
}

fn parse_tool(p: &mut LineParser<'_>, tool: &str, at: usize) -> Result<ToolApp, DslError> {
    let two = |p: &mut LineParser<'_>| -> Result<(ObjId, ObjId), DslError> {
        let a = p.argsn(2)?;
        Ok((a[0], a[1]))
    };
    let three = |p: &mut LineParser<'_>| -> Result<(ObjId, ObjId, ObjId), DslError> {
        let a = p.argsn(3)?;
        Ok((a[0], a[1], a[2]))
    };
    Ok(match tool {
        "Point" => {
            let args = p.objects_until_rpar()?;
            match args.len() {
                0 => ToolApp::FreePoint,
                1 => ToolApp::PointOn(args[0]),
                n => return Err(p.err_here(format!("Point expects 0 or 1 arguments, got {n}"))),
            }
        }
        "Line" => {
            let (a, b) = two(p)?;
            ToolApp::Line(a, b)
        }
        "Segment" => {
            let (a, b) = two(p)?;
            ToolApp::Segment(a, b)
        }
        "Ray" => {
            let (a, b) = two(p)?;
            ToolApp::Ray(a, b)
        }
        "Vector" => {
            let (a, b) = two(p)?;
            ToolApp::Vector(a, b)
        }
        "Circle" => {
            let (a, b) = two(p)?;
            ToolApp::Circle(a, b)
        }
        "Circle3" => {
            let (a, b, c) = three(p)?;
            ToolApp::Circle3(a, b, c)
        }
        "Midpoint" => {
            let args = p.objects_until_rpar()?;
            match args.len() {
                1 => ToolApp::Midpoint(args[0], None),
                2 => ToolApp::Midpoint(args[0], Some(args[1])),
                n => {
                    return Err(p.err_here(format!("Midpoint expects 1 or 2 arguments, got {n}")))
                }
            }
        }
        "PerpBisector" => {
            let args = p.objects_until_rpar()?;
            match args.len() {
                1 => ToolApp::PerpBisector(args[0], None),
                2 => ToolApp::PerpBisector(args[0], Some(args[1])),
                n => {
                    return Err(
                        p.err_here(format!("PerpBisector expects 1 or 2 arguments, got {n}"))
                    )
                }
            }
        }
        "PerpLine" => {
            let (a, b) = two(p)?;
            ToolApp::PerpLine(a, b)
        }
        "ParLine" => {
            let (a, b) = two(p)?;
            ToolApp::ParLine(a, b)
        }
        "AngularBisector" => {
            let (a, b, c) = three(p)?;
            ToolApp::AngularBisector(a, b, c)
        }
        "Intersect" => {
            let (a, b) = two(p)?;
            ToolApp::Intersect(a, b)
        }
        "Tangent" => {
            let (a, b) = two(p)?;
            ToolApp::Tangent(a, b)
        }
        "ReflectPoint" => {
            let (a, b) = two(p)?;
            ToolApp::ReflectPoint(a, b)
        }
        "ReflectLine" => {
            let (a, b) = two(p)?;
            ToolApp::ReflectLine(a, b)
        }
        "ReflectCircle" => {
            let (a, b) = two(p)?;
            ToolApp::ReflectCircle(a, b)
        }
        "Rotate" => {
            let x = p.object()?;
            p.expect(Tok::Comma)?;
            let deg_at = p.pos;
            let deg = p.int()?;
            let angle = Angle::new(deg as i32).map_err(|e| {
                let sp = &p.toks[deg_at.min(p.toks.len() - 1)];
                DslError::new(e.to_string(), sp.line, sp.col)
            })?;
            p.expect(Tok::Comma)?;
            let o = p.object()?;
            p.expect(Tok::RPar)?;
            ToolApp::Rotate(x, angle, o)
        }
        "Translate" => {
            let (a, b) = two(p)?;
            ToolApp::Translate(a, b)
        }
        "Parabola" => {
            let (a, b) = two(p)?;
            ToolApp::Parabola(a, b)
        }
        "Ellipse" => {
            let (a, b, c) = three(p)?;
            ToolApp::Ellipse(a, b, c)
        }
        "Hyperbola" => {
            let (a, b, c) = three(p)?;
            ToolApp::Hyperbola(a, b, c)
        }
        "Polygon" => {
            let args = p.objects_until_rpar()?;
            if args.len() < 3 {
                return Err(p.err_here("Polygon needs at least 3 vertices"));
            }
            ToolApp::Polygon(args)
        }
        other => {
            let sp = &p.toks[at];
            return Err(DslError::new(
                format!("unknown tool `{other}`"),
                sp.line,
                sp.col,
            ));
        }
    })
}

fn format_formula(c: &Construction, f: &Formula) -> String {
    fn prec(f: &Formula) -> u8 {
        match f {
            Formula::Add(..) | Formula::Sub(..) => 1,
            Formula::Mul(..) => 2,
            Formula::Neg(..) => 3,
            _ => 4,
        }
    }
    fn go(c: &Construction, f: &Formula, min_prec: u8) -> String {
        let s = match f {
            Formula::Const(r) => format!("{r}"),
            Formula::Dist2(a, b) => format!("Dist2({}, {})", c.name_of(*a), c.name_of(*b)),
            Formula::Length(a, b) => format!("Length({}, {})", c.name_of(*a), c.name_of(*b)),
            Formula::SignedArea2(vs) => {
                let names: Vec<String> = vs.iter().map(|v| c.name_of(*v)).collect();
                format!("SignedArea2({})", names.join(", "))
            }
            Formula::Add(a, b) => format!("{} + {}", go(c, a, 1), go(c, b, 2)),
            Formula::Sub(a, b) => format!("{} - {}", go(c, a, 1), go(c, b, 2)),
            Formula::Mul(a, b) => format!("{} * {}", go(c, a, 2), go(c, b, 3)),
            Formula::Neg(a) => format!("-{}", go(c, a, 3)),
        };
        if prec(f) < min_prec {
            format!("({s})")
        } else {
            s
        }
    }
    go(c, f, 0)
}

fn format_statement(c: &Construction, s: &Statement) -> String {
    let n = |id: &ObjId| c.name_of(*id);
    match s {
        Statement::AreCollinear(a, b, d) => {
            format!("AreCollinear({}, {}, {})", n(a), n(b), n(d))
        }
        Statement::AreConcurrent(a, b, d) => {
            format!("AreConcurrent({}, {}, {})", n(a), n(b), n(d))
        }
        Statement::AreConcyclic(a, b, d, e) => {
            format!("AreConcyclic({}, {}, {}, {})", n(a), n(b), n(d), n(e))
        }
        Statement::AreCongruent(a, b) => format!("AreCongruent({}, {})", n(a), n(b)),
        Statement::AreEqual(a, b) => format!("AreEqual({}, {})", n(a), n(b)),
        Statement::AreParallel(a, b) => format!("AreParallel({}, {})", n(a), n(b)),
        Statement::ArePerpendicular(a, b) => {
            format!("ArePerpendicular({}, {})", n(a), n(b))
        }
        Statement::Incident(a, b) => format!("Incident({}, {})", n(a), n(b)),
        Statement::EqualAngles(ids) => {
            let names: Vec<String> = ids.iter().map(|i| c.name_of(*i)).collect();
            format!("EqualAngles({})", names.join(", "))
        }
        Statement::Equation(lhs, rhs) => format!(
            "Equation({}, {})",
            format_formula(c, lhs),
            format_formula(c, rhs)
        ),
    }
}

/// Canonical text of a model; `parse_construction` of the result rebuilds an
/// identical model.
pub fn format_construction(c: &Construction, s: &Statement, mode: ProofMode) -> String {
    let mut out = String::new();
    for step in &c.steps {
        let args: Vec<String> = match &step.tool {
            ToolApp::FreePoint => vec![],
            ToolApp::PointOn(o) => vec![c.name_of(*o)],
            ToolApp::Line(a, b)
            | ToolApp::Segment(a, b)
            | ToolApp::Ray(a, b)
            | ToolApp::Vector(a, b)
            | ToolApp::Circle(a, b)
            | ToolApp::PerpLine(a, b)
            | ToolApp::ParLine(a, b)
            | ToolApp::Intersect(a, b)
            | ToolApp::Tangent(a, b)
            | ToolApp::ReflectPoint(a, b)
            | ToolApp::ReflectLine(a, b)
            | ToolApp::ReflectCircle(a, b)
            | ToolApp::Translate(a, b)
            | ToolApp::Parabola(a, b) => vec![c.name_of(*a), c.name_of(*b)],
            ToolApp::Circle3(a, b, d)
            | ToolApp::AngularBisector(a, b, d)
            | ToolApp::Ellipse(a, b, d)
            | ToolApp::Hyperbola(a, b, d) => {
                vec![c.name_of(*a), c.name_of(*b), c.name_of(*d)]
            }
            ToolApp::Midpoint(a, b) | ToolApp::PerpBisector(a, b) => match b {
                Some(b) => vec![c.name_of(*a), c.name_of(*b)],
                None => vec![c.name_of(*a)],
            },
            ToolApp::Rotate(x, angle, o) => vec![
                c.name_of(*x),
                angle.degrees().to_string(),
                c.name_of(*o),
            ],
            ToolApp::Polygon(vs) => vs.iter().map(|v| c.name_of(*v)).collect(),
        };
        // a constrained point is written with the same tool name as a free one
        let tool = match &step.tool {
            ToolApp::PointOn(_) => "Point",
            t => t.tool_name(),
        };
        out.push_str(&format!("{} = {}({})\n", step.name, tool, args.join(", ")));
    }
    let head = match mode {
        ProofMode::Prove => "Prove",
        ProofMode::ProveDetails => "ProveDetails",
    };
    out.push_str(&format!("{head}({})\n", format_statement(c, s)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomodel::LineishKind;

    const INVERSION: &str = "\
# circle inversion maps the circumcircle of A, B, C' through D'
A = Point()
B = Point()
c = Circle(A, B)
C = Point()
a = Line(B, C)
D = Point(a)
C' = ReflectCircle(C, c)
D' = ReflectCircle(D, c)
d = Circle3(A, B, C')
ProveDetails(Incident(D', d))
";

    #[test]
    fn parses_inversion_file() {
        let parsed = parse_construction(INVERSION).unwrap();
        assert_eq!(parsed.construction.steps.len(), 9);
        assert_eq!(parsed.mode, ProofMode::ProveDetails);
        let dp = parsed.construction.lookup("D'").unwrap();
        let d = parsed.construction.lookup("d").unwrap();
        assert_eq!(parsed.statement, Statement::Incident(dp, d));
    }

    #[test]
    fn unknown_object_position() {
        let err = parse_construction("M = Midpoint(A, B)\nProve(AreEqual(M, M))\n")
            .unwrap_err();
        assert!(err.message.contains("unknown object A"), "{err}");
        assert_eq!(err.line, 1);
        assert_eq!(err.col, 14);
    }

    #[test]
    fn unknown_angle_rejected() {
        let src = "X = Point()\nO = Point()\nY = Rotate(X, 37, O)\nProve(AreEqual(X, Y))\n";
        let err = parse_construction(src).unwrap_err();
        assert!(err.message.contains("37"), "{err}");
        assert_eq!(err.line, 3);
    }

    #[test]
    fn rotate_45_parses() {
        let src = "X = Point()\nO = Point()\nY = Rotate(X, 45, O)\nProve(AreEqual(X, Y))\n";
        let parsed = parse_construction(src).unwrap();
        let step = &parsed.construction.steps[2];
        assert!(matches!(step.tool, ToolApp::Rotate(_, a, _) if a.degrees() == 45));
    }

    #[test]
    fn missing_directive() {
        let err = parse_construction("A = Point()\n").unwrap_err();
        assert!(err.message.contains("missing Prove"), "{err}");
    }

    #[test]
    fn multiple_directives_rejected() {
        let src = "A = Point()\nB = Point()\nProve(AreEqual(A, B))\nProve(AreEqual(A, B))\n";
        let err = parse_construction(src).unwrap_err();
        assert!(err.message.contains("multiple"), "{err}");
        assert_eq!(err.line, 4);
    }

    #[test]
    fn polygon_and_formula_round_trip() {
        let src = "\
A = Point()
B = Point()
C = Point()
p = Polygon(A, B, C)
Prove(Equation(Dist2(A, B) + Dist2(B, C) * 2, 3/4 + SignedArea2(A, B, C)))
";
        let parsed = parse_construction(src).unwrap();
        let text = format_construction(&parsed.construction, &parsed.statement, parsed.mode);
        let again = parse_construction(&text).unwrap();
        assert_eq!(parsed.statement, again.statement);
        assert_eq!(
            parsed.construction.steps.len(),
            again.construction.steps.len()
        );
        let p1 = parsed.construction.lookup("p").unwrap();
        assert!(matches!(
            again.construction.obj(p1),
            crate::geomodel::GeoObject::Polygon { vertices } if vertices.len() == 3
        ));
    }

    #[test]
    fn segment_kind_preserved_in_round_trip() {
        let src = "A = Point()\nB = Point()\ns = Segment(A, B)\nProve(AreCongruent(s, s))\n";
        let parsed = parse_construction(src).unwrap();
        let text = format_construction(&parsed.construction, &parsed.statement, parsed.mode);
        let again = parse_construction(&text).unwrap();
        let s = again.construction.lookup("s").unwrap();
        assert!(matches!(
            again.construction.obj(s),
            crate::geomodel::GeoObject::LinePts { kind: LineishKind::Segment, .. }
        ));
    }

    #[test]
    fn declarations_after_directive_rejected() {
        let src = "A = Point()\nProve(AreEqual(A, A))\nB = Point()\n";
        let err = parse_construction(src).unwrap_err();
        assert!(err.message.contains("after the Prove"), "{err}");
    }
}
