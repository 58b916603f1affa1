//! Syntax tree of a script and its canonical rendering.

use std::fmt::{self, Write};

use super::Pos;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
            BinOp::Lt => "<",
            BinOp::Gt => ">",
            BinOp::Le => "<=",
            BinOp::Ge => ">=",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Lt | BinOp::Gt | BinOp::Le | BinOp::Ge | BinOp::Eq | BinOp::Ne => 1,
            BinOp::Add | BinOp::Sub => 2,
            BinOp::Mul | BinOp::Div => 3,
            BinOp::Pow => 5,
        }
    }
}

const UNARY_PREC: u8 = 4;
const ATOM_PREC: u8 = 6;

#[derive(Clone, Debug)]
pub enum ExprKind {
    Int(i64),
    Str(String),
    Ident(String),
    Call(String, Vec<Expr>),
    Index(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

/// Expressions compare by structure; positions are ignored.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Int(a), Int(b)) => a == b,
            (Str(a), Str(b)) | (Ident(a), Ident(b)) => a == b,
            (Call(f, a), Call(g, b)) => f == g && a == b,
            (Index(a, i), Index(b, j)) => a == b && i == j,
            (Neg(a), Neg(b)) => a == b,
            (Binary(o, a, b), Binary(p, c, d)) => o == p && a == c && b == d,
            _ => false,
        }
    }
}

impl Expr {
    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, _, _) => op.precedence(),
            ExprKind::Neg(_) => UNARY_PREC,
            ExprKind::Int(n) if *n < 0 => UNARY_PREC,
            _ => ATOM_PREC,
        }
    }

    fn write_child(&self, out: &mut String, min_prec: u8) {
        if self.precedence() < min_prec {
            out.push('(');
            self.write(out);
            out.push(')');
        } else {
            self.write(out);
        }
    }

    fn write(&self, out: &mut String) {
        match &self.kind {
            ExprKind::Int(n) => write!(out, "{n}").unwrap(),
            ExprKind::Str(s) => write!(out, "\"{s}\"").unwrap(),
            ExprKind::Ident(s) => out.push_str(s),
            ExprKind::Call(name, args) => {
                out.push_str(name);
                out.push('(');
                write_list(out, args);
                out.push(')');
            }
            ExprKind::Index(base, idx) => {
                base.write_child(out, ATOM_PREC);
                out.push('[');
                idx.write(out);
                out.push(']');
            }
            ExprKind::Neg(e) => {
                out.push('-');
                e.write_child(out, UNARY_PREC + 1);
            }
            ExprKind::Binary(op, l, r) => {
                let p = op.precedence();
                // every operator associates to the left
                l.write_child(out, p);
                out.push_str(op.symbol());
                r.write_child(out, p + 1);
            }
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        self.write(&mut s);
        s
    }
}

fn write_list(out: &mut String, items: &[Expr]) {
    for (k, e) in items.iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        e.write(out);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeclType {
    Int,
    Poly,
    Ideal,
    List,
}

impl DeclType {
    pub fn keyword(self) -> &'static str {
        match self {
            DeclType::Int => "int",
            DeclType::Poly => "poly",
            DeclType::Ideal => "ideal",
            DeclType::List => "list",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "int" => Some(DeclType::Int),
            "poly" => Some(DeclType::Poly),
            "ideal" => Some(DeclType::Ideal),
            "list" => Some(DeclType::List),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum StmtKind {
    Ring {
        name: String,
        characteristic: i64,
        parameter: Option<String>,
        vars: Vec<String>,
        order: String,
    },
    Minpoly(Expr),
    Decl {
        ty: DeclType,
        name: String,
        init: Vec<Expr>,
    },
    Assign {
        name: String,
        value: Expr,
    },
    Exprs(Vec<Expr>),
    For {
        init: Box<Stmt>,
        cond: Expr,
        step: Box<Stmt>,
        body: Vec<Stmt>,
    },
    Block(Vec<Stmt>),
    Quit,
}

/// Statements compare by structure; positions are ignored.
#[derive(Clone, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub pos: Pos,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Stmt {
    /// The statement without its terminating `;`.
    fn write_bare(&self, out: &mut String, indent: usize) {
        match &self.kind {
            StmtKind::Ring {
                name,
                characteristic,
                parameter,
                vars,
                order,
            } => {
                write!(out, "ring {name} = ").unwrap();
                match parameter {
                    Some(p) => write!(out, "({characteristic},{p})").unwrap(),
                    None => write!(out, "{characteristic}").unwrap(),
                }
                write!(out, ", ({}), {order}", vars.join(",")).unwrap();
            }
            StmtKind::Minpoly(e) => write!(out, "minpoly = {}", e.render()).unwrap(),
            StmtKind::Decl { ty, name, init } => {
                write!(out, "{} {name}", ty.keyword()).unwrap();
                if !init.is_empty() {
                    out.push_str(" = ");
                    write_list(out, init);
                }
            }
            StmtKind::Assign { name, value } => write!(out, "{name} = {}", value.render()).unwrap(),
            StmtKind::Exprs(items) => write_list(out, items),
            StmtKind::Quit => out.push_str("quit"),
            StmtKind::For { .. } | StmtKind::Block(_) => self.write(out, indent),
        }
    }

    fn write(&self, out: &mut String, indent: usize) {
        match &self.kind {
            StmtKind::For {
                init,
                cond,
                step,
                body,
            } => {
                out.push_str("for (");
                init.write_bare(out, indent);
                write!(out, "; {}; ", cond.render()).unwrap();
                step.write_bare(out, indent);
                out.push_str(")\n");
                out.push_str(&"  ".repeat(indent));
                write_block(out, body, indent);
            }
            StmtKind::Block(body) => write_block(out, body, indent),
            _ => {
                self.write_bare(out, indent);
                out.push(';');
            }
        }
    }
}

fn write_block(out: &mut String, body: &[Stmt], indent: usize) {
    out.push_str("{\n");
    for s in body {
        out.push_str(&"  ".repeat(indent + 1));
        s.write(out, indent + 1);
        out.push('\n');
    }
    out.push_str(&"  ".repeat(indent));
    out.push('}');
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Script {
    pub statements: Vec<Stmt>,
}

impl Script {
    /// Canonical source text; parsing it yields an equal script.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.statements {
            s.write(&mut out, 0);
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
