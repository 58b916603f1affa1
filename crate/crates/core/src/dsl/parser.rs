//! Recursive-descent parser producing a [`Script`].

use super::ast::{BinOp, DeclType, Expr, ExprKind, Script, Stmt, StmtKind};
use super::lexer::{tokenize, Tok, Token};
use super::{DslError, Pos};

pub fn parse(src: &str) -> Result<Script, DslError> {
    let tokens = tokenize(src)?;
    let end = match src.lines().count() {
        0 => Pos { line: 1, col: 1 },
        n => Pos {
            line: n,
            col: src.lines().last().map_or(0, |l| l.chars().count()) + 1,
        },
    };
    let mut p = Parser { tokens, at: 0, end };
    let mut statements = Vec::new();
    while !p.done() {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    end: Pos,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("integer {n}"),
        Tok::Ident(s) => format!("identifier '{s}'"),
        Tok::Str(_) => "string".into(),
        other => format!("'{}'", symbol(other)),
    }
}

fn symbol(t: &Tok) -> &'static str {
    match t {
        Tok::LParen => "(",
        Tok::RParen => ")",
        Tok::LBracket => "[",
        Tok::RBracket => "]",
        Tok::LBrace => "{",
        Tok::RBrace => "}",
        Tok::Comma => ",",
        Tok::Semi => ";",
        Tok::Assign => "=",
        Tok::Plus => "+",
        Tok::Minus => "-",
        Tok::Star => "*",
        Tok::Slash => "/",
        Tok::Caret => "^",
        Tok::Lt => "<",
        Tok::Gt => ">",
        Tok::Le => "<=",
        Tok::Ge => ">=",
        Tok::EqEq => "==",
        Tok::Ne => "!=",
        Tok::Int(_) | Tok::Ident(_) | Tok::Str(_) => "",
    }
}

impl Parser {
    fn done(&self) -> bool {
        self.at >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.tokens.get(self.at + k).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn error(&self, expected: &str) -> DslError {
        let found = match self.peek() {
            Some(t) => describe(t),
            None => "end of input".into(),
        };
        DslError::syntax(self.pos(), format!("expected {expected}, found {found}"))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), DslError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.error(&format!("'{}'", symbol(t))))
        }
    }

    fn ident(&mut self) -> Result<String, DslError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => Err(self.error("identifier")),
        }
    }

    fn int(&mut self) -> Result<i64, DslError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.at += 1;
                Ok(n)
            }
            _ => Err(self.error("integer")),
        }
    }

    fn statement(&mut self) -> Result<Stmt, DslError> {
        let pos = self.pos();
        let kind = match self.peek() {
            Some(Tok::LBrace) => StmtKind::Block(self.block()?),
            Some(Tok::Ident(w)) if w == "for" => self.for_loop()?,
            _ => {
                let kind = self.simple()?;
                self.expect(&Tok::Semi)?;
                kind
            }
        };
        Ok(Stmt { kind, pos })
    }

    fn block(&mut self) -> Result<Vec<Stmt>, DslError> {
        self.expect(&Tok::LBrace)?;
        let mut body = Vec::new();
        while !self.eat(&Tok::RBrace) {
            if self.done() {
                return Err(self.error("'}'"));
            }
            body.push(self.statement()?);
        }
        Ok(body)
    }

    fn for_loop(&mut self) -> Result<StmtKind, DslError> {
        self.at += 1;
        self.expect(&Tok::LParen)?;
        let pos = self.pos();
        let init = Stmt {
            kind: self.simple()?,
            pos,
        };
        self.expect(&Tok::Semi)?;
        let cond = self.expr()?;
        self.expect(&Tok::Semi)?;
        let pos = self.pos();
        let step = Stmt {
            kind: self.simple()?,
            pos,
        };
        self.expect(&Tok::RParen)?;
        let body = if self.peek() == Some(&Tok::LBrace) {
            self.block()?
        } else {
            vec![self.statement()?]
        };
        Ok(StmtKind::For {
            init: Box::new(init),
            cond,
            step: Box::new(step),
            body,
        })
    }

    /// A statement without its terminator.
    fn simple(&mut self) -> Result<StmtKind, DslError> {
        let head = match self.peek() {
            Some(Tok::Ident(w)) => w.clone(),
            _ => return Ok(StmtKind::Exprs(self.expr_list()?)),
        };
        let assigning = self.peek_at(1) == Some(&Tok::Assign);
        match head.as_str() {
            "ring" => self.ring(),
            "quit" if self.peek_at(1) == Some(&Tok::Semi) => {
                self.at += 1;
                Ok(StmtKind::Quit)
            }
            "minpoly" if assigning => {
                self.at += 2;
                Ok(StmtKind::Minpoly(self.expr()?))
            }
            w if DeclType::from_keyword(w).is_some()
                && matches!(self.peek_at(1), Some(Tok::Ident(_))) =>
            {
                let ty = DeclType::from_keyword(w).unwrap();
                self.at += 1;
                let name = self.ident()?;
                let init = if self.eat(&Tok::Assign) {
                    self.expr_list()?
                } else {
                    Vec::new()
                };
                Ok(StmtKind::Decl { ty, name, init })
            }
            _ if assigning => {
                let name = self.ident()?;
                self.at += 1;
                Ok(StmtKind::Assign {
                    name,
                    value: self.expr()?,
                })
            }
            _ => Ok(StmtKind::Exprs(self.expr_list()?)),
        }
    }

    fn ring(&mut self) -> Result<StmtKind, DslError> {
        self.at += 1;
        let name = self.ident()?;
        self.expect(&Tok::Assign)?;
        let (characteristic, parameter) = if self.eat(&Tok::LParen) {
            let c = self.int()?;
            self.expect(&Tok::Comma)?;
            let p = self.ident()?;
            self.expect(&Tok::RParen)?;
            (c, Some(p))
        } else {
            (self.int()?, None)
        };
        self.expect(&Tok::Comma)?;
        self.expect(&Tok::LParen)?;
        let mut vars = vec![self.ident()?];
        while self.eat(&Tok::Comma) {
            vars.push(self.ident()?);
        }
        self.expect(&Tok::RParen)?;
        self.expect(&Tok::Comma)?;
        let order = self.ident()?;
        Ok(StmtKind::Ring {
            name,
            characteristic,
            parameter,
            vars,
            order,
        })
    }

    fn expr_list(&mut self) -> Result<Vec<Expr>, DslError> {
        let mut items = vec![self.expr()?];
        while self.eat(&Tok::Comma) {
            items.push(self.expr()?);
        }
        Ok(items)
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.additive()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Lt) => BinOp::Lt,
                Some(Tok::Gt) => BinOp::Gt,
                Some(Tok::Le) => BinOp::Le,
                Some(Tok::Ge) => BinOp::Ge,
                Some(Tok::EqEq) => BinOp::Eq,
                Some(Tok::Ne) => BinOp::Ne,
                _ => return Ok(lhs),
            };
            self.at += 1;
            let rhs = self.additive()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn additive(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Plus) => BinOp::Add,
                Some(Tok::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.at += 1;
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => BinOp::Mul,
                Some(Tok::Slash) => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.at += 1;
            let rhs = self.unary()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        let pos = self.pos();
        if self.eat(&Tok::Minus) {
            let e = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(e)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, DslError> {
        let mut base = self.postfix()?;
        while self.eat(&Tok::Caret) {
            let exp = self.postfix()?;
            base = binary(BinOp::Pow, base, exp);
        }
        Ok(base)
    }

    fn postfix(&mut self) -> Result<Expr, DslError> {
        let mut e = self.primary()?;
        while self.peek() == Some(&Tok::LBracket) {
            self.at += 1;
            let idx = self.expr()?;
            self.expect(&Tok::RBracket)?;
            let pos = e.pos;
            e = Expr {
                kind: ExprKind::Index(Box::new(e), Box::new(idx)),
                pos,
            };
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, DslError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("expression"));
        };
        self.at += 1;
        let kind = match tok {
            Tok::Int(n) => {
                // a coefficient written directly before a monomial: 5w5
                if let Some(Token {
                    tok: Tok::Ident(name),
                    pos: ipos,
                    glued: true,
                }) = self.tokens.get(self.at).cloned()
                {
                    self.at += 1;
                    let lhs = Expr {
                        kind: ExprKind::Int(n),
                        pos,
                    };
                    let rhs = Expr {
                        kind: ExprKind::Ident(name),
                        pos: ipos,
                    };
                    return Ok(binary(BinOp::Mul, lhs, rhs));
                }
                ExprKind::Int(n)
            }
            Tok::Str(s) => ExprKind::Str(s),
            Tok::Ident(name) => {
                if self.eat(&Tok::LParen) {
                    let args = if self.eat(&Tok::RParen) {
                        Vec::new()
                    } else {
                        let a = self.expr_list()?;
                        self.expect(&Tok::RParen)?;
                        a
                    };
                    ExprKind::Call(name, args)
                } else {
                    ExprKind::Ident(name)
                }
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                return Ok(e);
            }
            _ => {
                self.at -= 1;
                return Err(self.error("expression"));
            }
        };
        Ok(Expr { kind, pos })
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
    let pos = lhs.pos;
    Expr {
        kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
        pos,
    }
}
