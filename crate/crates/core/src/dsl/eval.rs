//! Evaluation of a parsed script against the algebra engine.

use std::collections::HashMap;
use std::fmt::Write;

use crate::coeff::{ExtField, Field, Rational};
use crate::groebner::{intersect, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingContext};
use crate::rings::{graded_dim, hilbert_function, mingens_degrees, MinGens};

use super::ast::{BinOp, DeclType, Expr, ExprKind, Script, Stmt, StmtKind};
use super::{DslError, EvalError, Pos};

/// The line printed wherever a free resolution is requested.
pub const SYZYGY_WARNING: &str =
    "// higher syzygies unsupported; reporting minimal generator degrees";

const BUILTINS: &[&str] = &[
    "betti",
    "deg",
    "diff",
    "dim",
    "hilb",
    "homog",
    "intersect",
    "jacob",
    "lres",
    "ncols",
    "print",
    "std",
];

#[derive(Clone, Debug)]
pub enum Value {
    Int(i64),
    Poly(Polynomial),
    Ideal(Ideal),
    Str(String),
    /// Hilbert function of a quotient, from degree 0
    Hilbert {
        values: Vec<u64>,
        complete: bool,
    },
    /// minimal generator counts standing in for a free resolution
    Generators(Vec<MinGens>),
    Nothing,
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Int(_) => "int",
            Value::Poly(_) => "poly",
            Value::Ideal(_) => "ideal",
            Value::Str(_) => "string",
            Value::Hilbert { .. } => "hilbert table",
            Value::Generators(_) => "resolution",
            Value::Nothing => "none",
        }
    }
}

enum RingState {
    None,
    /// declared with a parameter whose minimal polynomial is still unset
    Pending {
        parameter: String,
        vars: Vec<String>,
        order: MonomialOrder,
    },
    Ready(Ring),
}

enum Flow {
    Continue,
    Quit,
}

/// An interpreter owning its environment and transcript.
pub struct Session {
    ring: RingState,
    values: HashMap<String, Value>,
    out: String,
}

impl Default for Session {
    fn default() -> Self {
        Self::new()
    }
}

fn err(pos: Pos, kind: EvalError) -> DslError {
    DslError::Eval { pos, kind }
}

fn expect_args(
    name: &str,
    args: &[Expr],
    range: std::ops::RangeInclusive<usize>,
    pos: Pos,
) -> Result<(), DslError> {
    if range.contains(&args.len()) {
        return Ok(());
    }
    let expected = if range.start() == range.end() {
        range.start().to_string()
    } else {
        format!("{}..{}", range.start(), range.end())
    };
    Err(err(
        pos,
        EvalError::Arity {
            name: name.to_string(),
            expected,
            found: args.len(),
        },
    ))
}

impl Session {
    pub fn new() -> Self {
        Session {
            ring: RingState::None,
            values: HashMap::new(),
            out: String::new(),
        }
    }

    pub fn transcript(&self) -> &str {
        &self.out
    }

    pub fn into_transcript(self) -> String {
        self.out
    }

    /// The active ring, once declared (and completed by `minpoly`).
    pub fn ring(&self) -> Option<&Ring> {
        match &self.ring {
            RingState::Ready(r) => Some(r),
            _ => None,
        }
    }

    pub fn value(&self, name: &str) -> Option<&Value> {
        self.values.get(name)
    }

    /// Runs every statement until the end or `quit`.
    pub fn run(&mut self, script: &Script) -> Result<(), DslError> {
        for s in &script.statements {
            if let Flow::Quit = self.statement(s)? {
                break;
            }
        }
        Ok(())
    }

    fn line(&mut self, s: &str) {
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn statement(&mut self, stmt: &Stmt) -> Result<Flow, DslError> {
        let pos = stmt.pos;
        match &stmt.kind {
            StmtKind::Ring {
                name: _,
                characteristic,
                parameter,
                vars,
                order,
            } => {
                if !matches!(self.ring, RingState::None) {
                    return Err(err(pos, EvalError::RingRedefined));
                }
                if *characteristic != 0 {
                    return Err(err(
                        pos,
                        EvalError::Unsupported(format!("characteristic {characteristic}")),
                    ));
                }
                let order = match order.as_str() {
                    "dp" => MonomialOrder::Grevlex,
                    "lp" => MonomialOrder::Lex,
                    other => {
                        return Err(err(
                            pos,
                            EvalError::Unsupported(format!("ordering {other}")),
                        ))
                    }
                };
                self.ring = match parameter {
                    Some(p) => RingState::Pending {
                        parameter: p.clone(),
                        vars: vars.clone(),
                        order,
                    },
                    None => RingState::Ready(
                        RingContext::new(vars.iter().cloned(), order, Field::Rational)
                            .map_err(|e| err(pos, e.into()))?,
                    ),
                };
            }
            StmtKind::Minpoly(e) => self.minpoly(e, pos)?,
            StmtKind::Decl { ty, name, init } => {
                let v = self.declared_value(*ty, init, pos)?;
                self.values.insert(name.clone(), v);
            }
            StmtKind::Assign { name, value } => {
                let old = self
                    .values
                    .get(name)
                    .ok_or_else(|| err(pos, EvalError::UnknownIdentifier(name.clone())))?;
                let ty = match old {
                    Value::Int(_) => DeclType::Int,
                    Value::Poly(_) => DeclType::Poly,
                    Value::Ideal(_) => DeclType::Ideal,
                    _ => DeclType::List,
                };
                let v = self.declared_value(ty, std::slice::from_ref(value), pos)?;
                self.values.insert(name.clone(), v);
            }
            StmtKind::Exprs(items) => {
                for e in items {
                    let v = self.expr(e)?;
                    let label = match &e.kind {
                        ExprKind::Ident(n) => n.as_str(),
                        _ => "_",
                    };
                    self.show(&v, label);
                }
            }
            StmtKind::For {
                init,
                cond,
                step,
                body,
            } => {
                self.statement(init)?;
                loop {
                    match self.expr(cond)? {
                        Value::Int(0) => break,
                        Value::Int(_) => {}
                        other => {
                            return Err(err(
                                cond.pos,
                                EvalError::Type(format!(
                                    "loop condition must be int, got {}",
                                    other.type_name()
                                )),
                            ))
                        }
                    }
                    for s in body {
                        if let Flow::Quit = self.statement(s)? {
                            return Ok(Flow::Quit);
                        }
                    }
                    self.statement(step)?;
                }
            }
            StmtKind::Block(body) => {
                for s in body {
                    if let Flow::Quit = self.statement(s)? {
                        return Ok(Flow::Quit);
                    }
                }
            }
            StmtKind::Quit => return Ok(Flow::Quit),
        }
        Ok(Flow::Continue)
    }

    fn minpoly(&mut self, e: &Expr, pos: Pos) -> Result<(), DslError> {
        let RingState::Pending {
            parameter,
            vars,
            order,
        } = &self.ring
        else {
            return Err(err(pos, EvalError::MinpolyWithoutParameter));
        };
        let (parameter, vars, order) = (parameter.clone(), vars.clone(), *order);
        // read the minimal polynomial as a polynomial in the parameter
        let aux = RingContext::new([parameter.clone()], MonomialOrder::Lex, Field::Rational)
            .map_err(|e| err(pos, e.into()))?;
        let p = self.ring_poly_in(&aux, e)?;
        let deg = p.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.degree() as usize] = c.as_rational().expect("rational coefficient").clone();
        }
        let k = ExtField::new(coeffs, parameter.clone()).map_err(|e| err(pos, e.into()))?;
        let ring = RingContext::new(vars, order, Field::Ext(k)).map_err(|e| err(pos, e.into()))?;
        self.ring = RingState::Ready(ring);
        Ok(())
    }

    /// Evaluates `e` as a polynomial in `ring`, which temporarily replaces
    /// the active ring.
    fn ring_poly_in(&mut self, ring: &Ring, e: &Expr) -> Result<Polynomial, DslError> {
        let saved = std::mem::replace(&mut self.ring, RingState::Ready(ring.clone()));
        let v = self.expr(e);
        self.ring = saved;
        let v = v?;
        let pos = e.pos;
        match v {
            Value::Int(n) => Ok(Polynomial::constant(ring, ring.field().from_int(n))),
            Value::Poly(p) => Ok(p),
            other => Err(err(
                pos,
                EvalError::Type(format!("expected a polynomial, got {}", other.type_name())),
            )),
        }
    }

    fn active_ring(&self, pos: Pos) -> Result<&Ring, DslError> {
        match &self.ring {
            RingState::Ready(r) => Ok(r),
            RingState::Pending { parameter, .. } => {
                Err(err(pos, EvalError::MissingMinpoly(parameter.clone())))
            }
            RingState::None => Err(err(pos, EvalError::NoRing)),
        }
    }

    fn declared_value(&mut self, ty: DeclType, init: &[Expr], pos: Pos) -> Result<Value, DslError> {
        if ty != DeclType::Ideal && init.len() > 1 {
            return Err(err(
                pos,
                EvalError::Type(format!("a {} takes a single value", ty.keyword())),
            ));
        }
        match ty {
            DeclType::Int => match init.first() {
                None => Ok(Value::Int(0)),
                Some(e) => match self.expr(e)? {
                    Value::Int(n) => Ok(Value::Int(n)),
                    other => Err(err(
                        e.pos,
                        EvalError::Type(format!("cannot assign {} to int", other.type_name())),
                    )),
                },
            },
            DeclType::Poly => match init.first() {
                None => Ok(Value::Poly(Polynomial::zero(self.active_ring(pos)?))),
                Some(e) => {
                    let v = self.expr(e)?;
                    Ok(Value::Poly(self.to_poly(v, e.pos)?))
                }
            },
            DeclType::Ideal => {
                let ring = self.active_ring(pos)?.clone();
                let mut gens = Vec::new();
                for e in init {
                    match self.expr(e)? {
                        Value::Ideal(i) => gens.extend(i.generators().iter().cloned()),
                        v => gens.push(self.to_poly(v, e.pos)?),
                    }
                }
                let ideal = Ideal::new(&ring, gens).map_err(|e| err(pos, e.into()))?;
                Ok(Value::Ideal(ideal))
            }
            DeclType::List => match init.first() {
                None => Ok(Value::Nothing),
                Some(e) => self.expr(e),
            },
        }
    }

    fn to_poly(&self, v: Value, pos: Pos) -> Result<Polynomial, DslError> {
        match v {
            Value::Poly(p) => Ok(p),
            Value::Int(n) => {
                let ring = self.active_ring(pos)?;
                Ok(Polynomial::constant(ring, ring.field().from_int(n)))
            }
            other => Err(err(
                pos,
                EvalError::Type(format!("expected a polynomial, got {}", other.type_name())),
            )),
        }
    }

    fn to_ideal(&self, v: Value, pos: Pos) -> Result<Ideal, DslError> {
        match v {
            Value::Ideal(i) => Ok(i),
            other => {
                let p = self.to_poly(other, pos)?;
                Ideal::new(&p.ring().clone(), vec![p]).map_err(|e| err(pos, e.into()))
            }
        }
    }

    fn expr(&mut self, e: &Expr) -> Result<Value, DslError> {
        let pos = e.pos;
        match &e.kind {
            ExprKind::Int(n) => Ok(Value::Int(*n)),
            ExprKind::Str(s) => Ok(Value::Str(s.clone())),
            ExprKind::Ident(name) => self.identifier(name, pos),
            ExprKind::Neg(inner) => match self.expr(inner)? {
                Value::Int(n) => n
                    .checked_neg()
                    .map(Value::Int)
                    .ok_or_else(|| err(pos, EvalError::Overflow)),
                Value::Poly(p) => Ok(Value::Poly(-&p)),
                other => Err(err(
                    pos,
                    EvalError::Type(format!("cannot negate {}", other.type_name())),
                )),
            },
            ExprKind::Binary(op, l, r) => {
                let a = self.expr(l)?;
                let b = self.expr(r)?;
                self.binary(*op, a, b, pos)
            }
            ExprKind::Index(base, idx) => {
                let b = self.expr(base)?;
                let k = match self.expr(idx)? {
                    Value::Int(k) => k,
                    other => {
                        return Err(err(
                            idx.pos,
                            EvalError::Type(format!(
                                "index must be int, got {}",
                                other.type_name()
                            )),
                        ))
                    }
                };
                match b {
                    Value::Ideal(i) => {
                        let len = i.generators().len();
                        if k < 1 || k as usize > len {
                            return Err(err(pos, EvalError::IndexOutOfRange { index: k, len }));
                        }
                        Ok(Value::Poly(i.generators()[k as usize - 1].clone()))
                    }
                    other => Err(err(
                        pos,
                        EvalError::Type(format!("cannot index {}", other.type_name())),
                    )),
                }
            }
            ExprKind::Call(name, args) => self.call(name, args, pos),
        }
    }

    fn identifier(&self, name: &str, pos: Pos) -> Result<Value, DslError> {
        if let Some(v) = self.values.get(name) {
            return Ok(v.clone());
        }
        let ring = match &self.ring {
            RingState::Ready(r) => r,
            RingState::Pending { parameter, .. } if name.starts_with(parameter.as_str()) => {
                return Err(err(pos, EvalError::MissingMinpoly(parameter.clone())))
            }
            _ => return Err(err(pos, EvalError::UnknownIdentifier(name.to_string()))),
        };
        monomial_word(ring, name)
            .map(Value::Poly)
            .ok_or_else(|| err(pos, EvalError::UnknownIdentifier(name.to_string())))
    }

    fn binary(&self, op: BinOp, a: Value, b: Value, pos: Pos) -> Result<Value, DslError> {
        use BinOp::*;
        if let (Value::Int(x), Value::Int(y)) = (&a, &b) {
            let (x, y) = (*x, *y);
            let bool_int = |c: bool| Ok(Value::Int(c as i64));
            let checked = |r: Option<i64>| {
                r.map(Value::Int)
                    .ok_or_else(|| err(pos, EvalError::Overflow))
            };
            return match op {
                Add => checked(x.checked_add(y)),
                Sub => checked(x.checked_sub(y)),
                Mul => checked(x.checked_mul(y)),
                Div if y == 0 => Err(err(pos, EvalError::DivisionByZero)),
                Div if x % y == 0 => checked(x.checked_div(y)),
                Div => {
                    let ring = self.active_ring(pos)?;
                    let q = ring.field().from_rational(Rational::new(x, y));
                    Ok(Value::Poly(Polynomial::constant(ring, q)))
                }
                Pow => {
                    let e = u32::try_from(y).map_err(|_| err(pos, EvalError::NegativeExponent))?;
                    checked(x.checked_pow(e))
                }
                Lt => bool_int(x < y),
                Gt => bool_int(x > y),
                Le => bool_int(x <= y),
                Ge => bool_int(x >= y),
                Eq => bool_int(x == y),
                Ne => bool_int(x != y),
            };
        }
        if op == Pow {
            let Value::Int(e) = b else {
                return Err(err(pos, EvalError::Type("exponent must be int".into())));
            };
            let e = u32::try_from(e).map_err(|_| err(pos, EvalError::NegativeExponent))?;
            return Ok(Value::Poly(self.to_poly(a, pos)?.pow(e)));
        }
        let (ta, tb) = (a.type_name(), b.type_name());
        let mismatch = || {
            err(
                pos,
                EvalError::Type(format!("cannot apply '{}' to {ta} and {tb}", op.symbol())),
            )
        };
        let p = self.to_poly(a, pos).map_err(|_| mismatch())?;
        let q = self.to_poly(b, pos).map_err(|_| mismatch())?;
        let lift = |r: Result<Polynomial, crate::poly::PolyError>| {
            r.map(Value::Poly).map_err(|e| err(pos, e.into()))
        };
        match op {
            Add => lift(p.checked_add(&q)),
            Sub => lift(p.checked_sub(&q)),
            Mul => lift(p.checked_mul(&q)),
            Div => {
                if q.is_zero() {
                    return Err(err(pos, EvalError::DivisionByZero));
                }
                if q.total_degree() != Some(0) {
                    return Err(err(pos, EvalError::NonConstantDivisor));
                }
                let inv = q
                    .leading_coeff()
                    .unwrap()
                    .inv()
                    .map_err(|e| err(pos, e.into()))?;
                Ok(Value::Poly(p.scalar_mul(&inv)))
            }
            Eq => Ok(Value::Int((p == q) as i64)),
            Ne => Ok(Value::Int((p != q) as i64)),
            _ => Err(mismatch()),
        }
    }

    fn call(&mut self, name: &str, args: &[Expr], pos: Pos) -> Result<Value, DslError> {
        if !BUILTINS.contains(&name) {
            return Err(err(pos, EvalError::UnsupportedBuiltin(name.to_string())));
        }
        let arity = match name {
            "print" | "hilb" | "lres" => 1..=2,
            "diff" | "intersect" => 2..=2,
            _ => 1..=1,
        };
        expect_args(name, args, arity, pos)?;
        let mut vals = Vec::with_capacity(args.len());
        for a in args {
            vals.push(self.expr(a)?);
        }
        let apos = |k: usize| args[k].pos;
        let lib = |e: crate::rings::RingsError| err(pos, e.into());
        match name {
            "jacob" => {
                let f = self.to_poly(vals.remove(0), apos(0))?;
                Ok(Value::Ideal(
                    jacobian_ideal(&f).map_err(|e| err(pos, e.into()))?,
                ))
            }
            "std" => {
                let i = self.to_ideal(vals.remove(0), apos(0))?;
                let gb = i.groebner_basis().to_vec();
                Ok(Value::Ideal(Ideal::from_reduced_basis(i.ring(), gb)))
            }
            "intersect" => {
                let j = self.to_ideal(vals.remove(1), apos(1))?;
                let i = self.to_ideal(vals.remove(0), apos(0))?;
                Ok(Value::Ideal(
                    intersect(&i, &j).map_err(|e| err(pos, e.into()))?,
                ))
            }
            "dim" => {
                let i = self.to_ideal(vals.remove(0), apos(0))?;
                Ok(Value::Int(i.krull_dim()))
            }
            "hilb" => {
                if vals.len() == 2 && !matches!(vals[1], Value::Int(1 | 2)) {
                    return Err(err(
                        apos(1),
                        EvalError::Type("hilb flag must be 1 or 2".into()),
                    ));
                }
                let i = self.to_ideal(vals.remove(0), apos(0))?;
                let (values, complete) = hilbert_table(&i).map_err(lib)?;
                Ok(Value::Hilbert { values, complete })
            }
            "diff" => {
                let v = self.to_poly(vals.remove(1), apos(1))?;
                let f = self.to_poly(vals.remove(0), apos(0))?;
                let idx = variable_index(&v).ok_or_else(|| {
                    err(
                        apos(1),
                        EvalError::Type("diff needs a ring variable".into()),
                    )
                })?;
                Ok(Value::Poly(f.diff_at(idx)))
            }
            "deg" => {
                let f = self.to_poly(vals.remove(0), apos(0))?;
                Ok(Value::Int(f.total_degree().map_or(-1, |d| d as i64)))
            }
            "homog" => match vals.remove(0) {
                Value::Ideal(i) => Ok(Value::Int(i.is_homogeneous() as i64)),
                v => {
                    let f = self.to_poly(v, apos(0))?;
                    Ok(Value::Int(f.is_homogeneous().is_some() as i64))
                }
            },
            "ncols" => match vals.remove(0) {
                Value::Ideal(i) => Ok(Value::Int(i.generators().len() as i64)),
                Value::Generators(t) => {
                    Ok(Value::Int(t.iter().map(|m| m.count).sum::<usize>() as i64))
                }
                other => Err(err(
                    apos(0),
                    EvalError::Type(format!("ncols of {}", other.type_name())),
                )),
            },
            "lres" | "betti" => match vals.remove(0) {
                Value::Generators(t) => Ok(Value::Generators(t)),
                v => {
                    let i = self.to_ideal(v, apos(0))?;
                    let table = mingens_degrees(&i, i.max_generator_degree()).map_err(lib)?;
                    self.line(SYZYGY_WARNING);
                    Ok(Value::Generators(table))
                }
            },
            "print" => {
                if vals.len() == 2 {
                    match (&vals[0], &vals[1]) {
                        (Value::Generators(_), Value::Str(f)) if f == "betti" => {}
                        (_, Value::Str(f)) => {
                            return Err(err(
                                apos(1),
                                EvalError::Unsupported(format!("print format \"{f}\"")),
                            ))
                        }
                        _ => {
                            return Err(err(
                                apos(1),
                                EvalError::Type("print format must be a string".into()),
                            ))
                        }
                    }
                }
                let v = vals.remove(0);
                self.show(&v, "_");
                Ok(Value::Nothing)
            }
            _ => unreachable!("builtin list and dispatch agree"),
        }
    }

    fn show(&mut self, v: &Value, label: &str) {
        let text = render_value(v, label);
        self.out.push_str(&text);
    }
}

/// Transcript text for a value; every line ends in a newline.
pub fn render_value(v: &Value, label: &str) -> String {
    let mut s = String::new();
    match v {
        Value::Int(n) => writeln!(s, "{n}").unwrap(),
        Value::Poly(p) => writeln!(s, "{}", p.render()).unwrap(),
        Value::Str(t) => writeln!(s, "{t}").unwrap(),
        Value::Ideal(i) => {
            if i.generators().is_empty() {
                writeln!(s, "{label}[1]=0").unwrap();
            }
            for (k, g) in i.generators().iter().enumerate() {
                writeln!(s, "{label}[{}]={}", k + 1, g.render()).unwrap();
            }
        }
        Value::Hilbert { values, complete } => {
            writeln!(s, "// Hilbert function of the quotient").unwrap();
            for (d, h) in values.iter().enumerate() {
                writeln!(s, "// degree {d}: {h}").unwrap();
            }
            if *complete {
                writeln!(
                    s,
                    "// vector space dimension: {}",
                    values.iter().sum::<u64>()
                )
                .unwrap();
            }
        }
        Value::Generators(table) => {
            writeln!(s, "// minimal generators by degree").unwrap();
            for m in table.iter().filter(|m| m.count > 0) {
                writeln!(s, "// degree {}: {}", m.degree, m.count).unwrap();
            }
            writeln!(
                s,
                "// total: {}",
                table.iter().map(|m| m.count).sum::<usize>()
            )
            .unwrap();
        }
        Value::Nothing => {}
    }
    s
}

/// Partial derivatives in variable order, for any polynomial.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal, crate::groebner::GroebnerError> {
    let gens = (0..f.ring().nvars()).map(|i| f.diff_at(i)).collect();
    Ideal::new(f.ring(), gens)
}

/// Hilbert function of `R/I` for a homogeneous ideal. A zero-dimensional
/// quotient is listed through the first vanishing degree (`complete`);
/// otherwise the table stops one degree past the largest element of the
/// reduced basis.
pub fn hilbert_table(i: &Ideal) -> Result<(Vec<u64>, bool), crate::rings::RingsError> {
    if i.krull_dim() <= 0 {
        let mut values = Vec::new();
        loop {
            let h = graded_dim(i, values.len() as u64)?.dim_quotient;
            values.push(h);
            if h == 0 {
                return Ok((values, true));
            }
        }
    }
    let top = i
        .groebner_basis()
        .iter()
        .filter_map(Polynomial::total_degree)
        .max()
        .unwrap_or(0);
    Ok((hilbert_function(i, top + 1)?, false))
}

fn variable_index(v: &Polynomial) -> Option<usize> {
    let [(m, c)] = v.terms() else {
        return None;
    };
    if !c.is_one() || m.degree() != 1 {
        return None;
    }
    m.exponents().iter().position(|&e| e == 1)
}

/// Reads a word such as `x2y3z` or `a2` as a monomial over the ring's
/// variables and coefficient-field generator, longest names first.
pub fn monomial_word(ring: &Ring, word: &str) -> Option<Polynomial> {
    let field = ring.field();
    let mut names: Vec<(&str, Option<usize>)> = ring
        .variables()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), Some(i)))
        .collect();
    if let Some(g) = field.generator_name() {
        names.push((g, None));
    }
    names.sort_by_key(|(n, _)| std::cmp::Reverse(n.len()));
    let mut exps = vec![0u32; ring.nvars()];
    let mut coeff = field.one();
    let mut rest = word;
    while !rest.is_empty() {
        let &(name, slot) = names.iter().find(|(n, _)| rest.starts_with(n))?;
        rest = &rest[name.len()..];
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let e: u32 = if digits == 0 {
            1
        } else {
            rest[..digits].parse().ok()?
        };
        rest = &rest[digits..];
        match slot {
            Some(i) => exps[i] += e,
            None => coeff = &coeff * &field.generator()?.pow(e as i64).ok()?,
        }
    }
    Some(Polynomial::monomial(ring, Monomial::new(exps), coeff))
}
