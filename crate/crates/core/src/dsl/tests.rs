use proptest::prelude::*;

use super::*;
use crate::coeff::Field;
use crate::groebner::{intersect, Ideal};
use crate::poly::{MonomialOrder, Polynomial, RingContext};
use crate::rings::hilbert_function;

const S6: &str = include_str!("../../../../sessions/s6_session.sess");
const S5_HILBERT: &str = include_str!("../../../../sessions/s5_session2.sess");
const S5_IDEAL: &str = include_str!("../../../../sessions/s5_session1.sess");

fn eval_error(src: &str) -> EvalError {
    match run(src).unwrap_err() {
        DslError::Eval { kind, .. } => kind,
        other => panic!("expected an evaluation error, got {other}"),
    }
}

#[test]
fn empty_script_prints_nothing() {
    assert_eq!(parse("").unwrap().statements.len(), 0);
    assert_eq!(run("").unwrap(), "");
    assert_eq!(run("// only a comment\n").unwrap(), "");
}

#[test]
fn glued_monomials_read_as_products() {
    let src = "ring r=0,(w,x,y,z),dp; poly K=w2x+wxy+wy2+y3+wxz; K;";
    let script = parse(src).unwrap();
    assert_eq!(script.statements.len(), 3);
    let mut s = Session::new();
    s.run(&script).unwrap();
    let ring = s.ring().unwrap().clone();
    let expected = Polynomial::parse(&ring, "w^2*x+w*x*y+w*y^2+y^3+w*x*z").unwrap();
    match s.value("K") {
        Some(Value::Poly(p)) => assert_eq!(*p, expected),
        other => panic!("K bound to {other:?}"),
    }
    assert_eq!(s.transcript(), format!("{}\n", expected.render()));
}

#[test]
fn coefficient_glued_to_monomial() {
    let out = run("ring r=0,(w,x,y,z),dp; 5w5; 4x3y; 2*5w5;").unwrap();
    assert_eq!(out, "5*w^5\n4*x^3*y\n10*w^5\n");
}

#[test]
fn parametric_ring_with_minpoly() {
    let src = "ring r=(0,a),(w,x,y,z),dp; minpoly=a2-a+1; poly p=a*a; p;";
    let script = parse(src).unwrap();
    assert!(matches!(
        &script.statements[0].kind,
        StmtKind::Ring { parameter: Some(p), .. } if p == "a"
    ));
    let mut s = Session::new();
    s.run(&script).unwrap();
    match s.ring().unwrap().field() {
        Field::Ext(k) => assert_eq!(k.degree(), 2),
        Field::Rational => panic!("expected an extension field"),
    }
    // a^2 = a - 1
    let expected = Polynomial::parse(s.ring().unwrap(), "a-1").unwrap();
    assert!(matches!(s.value("p"), Some(Value::Poly(p)) if *p == expected));
}

#[test]
fn parameter_needs_minpoly() {
    let e = eval_error("ring r=(0,a),(x,y),dp; poly p=a*x;");
    assert_eq!(e, EvalError::MissingMinpoly("a".into()));
}

#[test]
fn int_bindings_coerce_into_polynomials() {
    assert_eq!(
        run("ring r=0,(x,y,z),dp; int u=1; poly f=u*x; print(f);").unwrap(),
        "x\n"
    );
    assert_eq!(
        run("ring r=0,(x,y),dp; int u=0; poly f=u*x+y; f;").unwrap(),
        "y\n"
    );
    assert_eq!(run("int n=7; n/2; n/7;").unwrap_err().pos().line, 1);
    assert_eq!(
        run("ring r=0,(x),dp; int n=7; n/2; n/7;").unwrap(),
        "7/2\n1\n"
    );
}

#[test]
fn unknown_call_names_the_builtin() {
    let err = run("ring r=0,(x,y),dp;\npoly i=x;\nfoo(i);").unwrap_err();
    assert_eq!(
        err,
        DslError::Eval {
            pos: Pos { line: 3, col: 1 },
            kind: EvalError::UnsupportedBuiltin("foo".into()),
        }
    );
    assert!(err.to_string().contains("foo"));
    assert!(!err.is_parse_error());
}

#[test]
fn syntax_errors_carry_positions() {
    let err = run("ring r=0,(x,y),dp;\npoly f = x+;\n").unwrap_err();
    assert!(err.is_parse_error());
    assert_eq!(err.pos(), Pos { line: 2, col: 12 });
    // the unbalanced loop header as printed in some transcripts
    let err = parse("int n; for (n=3); n>=1; n=n-1) { n; }").unwrap_err();
    assert!(err.is_parse_error());
    let err = parse("poly f = 2 $ 3;").unwrap_err();
    assert!(matches!(
        err,
        DslError::Lex {
            pos: Pos { line: 1, col: 12 },
            ..
        }
    ));
}

#[test]
fn evaluation_errors() {
    assert_eq!(eval_error("x;"), EvalError::UnknownIdentifier("x".into()));
    assert_eq!(
        eval_error("ring r=0,(x),dp; q;"),
        EvalError::UnknownIdentifier("q".into())
    );
    assert_eq!(eval_error("poly f;"), EvalError::NoRing);
    assert_eq!(
        eval_error("ring r=0,(x),dp; ring s=0,(y),dp;"),
        EvalError::RingRedefined
    );
    assert_eq!(
        eval_error("ring r=0,(x),dp; minpoly=x2+1;"),
        EvalError::MinpolyWithoutParameter
    );
    assert_eq!(
        eval_error("ring r=0,(x),dp; x/(x+1);"),
        EvalError::NonConstantDivisor
    );
    assert_eq!(
        eval_error("ring r=0,(x),dp; ideal i=x; i[2];"),
        EvalError::IndexOutOfRange { index: 2, len: 1 }
    );
    assert!(matches!(
        eval_error("ring r=0,(x),dp; diff(x);"),
        EvalError::Arity { .. }
    ));
    assert!(matches!(
        eval_error("ring r=7,(x),dp;"),
        EvalError::Unsupported(_)
    ));
    assert!(matches!(
        eval_error("ring r=0,(x,y),dp; hilb(x+y2);"),
        EvalError::Rings(_)
    ));
}

#[test]
fn loops_blocks_and_quit() {
    let src = "int n; int s; for (n=4; n>=1; n=n-1) { s = s+n; } s; quit; s;";
    assert_eq!(run(src).unwrap(), "10\n");
    assert_eq!(run("int k=2; { k, k*k; } k^10;").unwrap(), "2\n4\n1024\n");
}

#[test]
fn ideal_printing_uses_the_binding_name() {
    let out = run("ring r=0,(x,y),dp; ideal i = x2, y; i; std(i);").unwrap();
    assert_eq!(out, "i[1]=x^2\ni[2]=y\n_[1]=x^2\n_[2]=y\n");
}

#[test]
fn builtins_agree_with_library() {
    let ring = RingContext::new(
        ["w", "x", "y", "z"],
        MonomialOrder::Grevlex,
        Field::Rational,
    )
    .unwrap();
    let p = |s: &str| Polynomial::parse(&ring, s).unwrap();
    let f = p("w^5+x^4*y+x*y^4+z^5+w^2*x*z^2");
    let src = "ring r=0,(w,x,y,z),dp; poly f=w5+x4y+xy4+z5+w2xz2; ideal j=jacob(f); \
               ideal i=std(j); ideal a=x2,y; ideal b=y2,z; ideal c=intersect(a,b); \
               int d=dim(i); int e=dim(c); poly g=diff(f,x);";
    let mut s = Session::new();
    s.run(&parse(src).unwrap()).unwrap();
    let get = |name: &str| s.value(name).cloned().unwrap();

    let jac: Vec<Polynomial> = (0..4).map(|k| f.diff_at(k)).collect();
    let Value::Ideal(j) = get("j") else { panic!() };
    assert_eq!(j.generators(), jac.as_slice());
    let Value::Ideal(i) = get("i") else { panic!() };
    let lib = Ideal::new(&ring, jac).unwrap();
    assert_eq!(i.generators(), lib.groebner_basis());
    assert!(matches!(get("d"), Value::Int(0)));
    assert!(matches!(get("g"), Value::Poly(g) if g == f.diff_at(1)));

    let a = Ideal::new(&ring, vec![p("x^2"), p("y")]).unwrap();
    let b = Ideal::new(&ring, vec![p("y^2"), p("z")]).unwrap();
    let Value::Ideal(c) = get("c") else { panic!() };
    assert_eq!(
        c.groebner_basis(),
        intersect(&a, &b).unwrap().groebner_basis()
    );
    assert!(matches!(get("e"), Value::Int(n) if n == c.krull_dim()));

    let (table, complete) = hilbert_table(&i).unwrap();
    assert!(complete);
    assert_eq!(*table.last().unwrap(), 0);
    assert_eq!(table, hilbert_function(&i, table.len() as u64 - 1).unwrap());
}

#[test]
fn degree_and_homogeneity() {
    let out =
        run("ring r=0,(x,y),dp; deg(x3+y); deg(0); homog(x3+y); homog(x2+xy); homog(0);").unwrap();
    assert_eq!(out, "3\n-1\n0\n1\n1\n");
}

#[test]
fn resolution_table_for_a_monomial_ideal() {
    let src = "ring r=0,(x,y,z),dp; ideal I = x2, xy, y3, x2y; list T = lres(I,0); \
               print(betti(T),\"betti\"); ncols(T);";
    let out = run(src).unwrap();
    assert_eq!(
        out,
        format!(
            "{SYZYGY_WARNING}\n// minimal generators by degree\n// degree 2: 2\n// degree 3: 1\n// total: 3\n3\n"
        )
    );
}

#[test]
fn short_session_transcript() {
    let out = run(S6).unwrap();
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "3");
    assert_eq!(lines[1], SYZYGY_WARNING);
    assert!(lines.contains(&"// degree 6: 1"));
    assert!(lines.contains(&"// total: 5"));
    assert_eq!(lines.len(), 2 + 6 + 3);
}

#[test]
fn hilbert_session_shows_the_drop_in_degree_eleven() {
    let out = run(S5_HILBERT).unwrap();
    let tables: Vec<&str> = out.split("Hilbert series of").skip(1).collect();
    assert_eq!(tables.len(), 2);
    assert!(tables[0].contains("// degree 11: 4\n"));
    assert!(tables[1].contains("// degree 11: 3\n"));
}

#[test]
fn session_files_round_trip() {
    for src in [S6, S5_HILBERT, S5_IDEAL] {
        let script = parse(src).unwrap();
        let again = parse(&script.render()).unwrap();
        assert_eq!(script, again);
        assert_eq!(script.render(), again.render());
    }
}

#[test]
fn transcripts_are_deterministic() {
    assert_eq!(run(S6).unwrap(), run(S6).unwrap());
}

#[test]
fn monomial_words() {
    let ring = RingContext::new(
        ["w", "x", "y", "z"],
        MonomialOrder::Grevlex,
        Field::Rational,
    )
    .unwrap();
    let m = monomial_word(&ring, "x2y3z").unwrap();
    assert_eq!(m, Polynomial::parse(&ring, "x^2*y^3*z").unwrap());
    assert_eq!(
        monomial_word(&ring, "wxw").unwrap(),
        Polynomial::parse(&ring, "w^2*x").unwrap()
    );
    assert!(monomial_word(&ring, "xq").is_none());
    assert!(monomial_word(&ring, "2x").is_none());
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let pos = Pos { line: 1, col: 1 };
    let leaf = prop_oneof![
        (0i64..50).prop_map(ExprKind::Int),
        prop::sample::select(vec!["x", "y2", "K", "x2y", "n"])
            .prop_map(|s| ExprKind::Ident(s.into())),
        Just(ExprKind::Str("betti".into())),
    ]
    .prop_map(move |kind| Expr { kind, pos });
    leaf.prop_recursive(4, 24, 3, move |inner| {
        let ops = prop::sample::select(vec![
            BinOp::Add,
            BinOp::Sub,
            BinOp::Mul,
            BinOp::Div,
            BinOp::Pow,
            BinOp::Lt,
            BinOp::Ge,
            BinOp::Eq,
            BinOp::Ne,
        ]);
        prop_oneof![
            (ops, inner.clone(), inner.clone()).prop_map(|(op, l, r)| ExprKind::Binary(
                op,
                Box::new(l),
                Box::new(r)
            )),
            inner.clone().prop_map(|e| ExprKind::Neg(Box::new(e))),
            (inner.clone(), inner.clone())
                .prop_map(|(b, i)| ExprKind::Index(Box::new(b), Box::new(i))),
            (
                prop::sample::select(vec!["jacob", "std", "diff", "print"]),
                prop::collection::vec(inner, 1..3)
            )
                .prop_map(|(f, args)| ExprKind::Call(f.into(), args)),
        ]
        .prop_map(move |kind| Expr { kind, pos })
    })
}

fn arb_script() -> impl Strategy<Value = Script> {
    let pos = Pos { line: 1, col: 1 };
    let stmt = prop_oneof![
        prop::collection::vec(arb_expr(), 1..3).prop_map(StmtKind::Exprs),
        arb_expr().prop_map(|value| StmtKind::Assign {
            name: "n".into(),
            value
        }),
        (
            prop::sample::select(vec![
                DeclType::Int,
                DeclType::Poly,
                DeclType::Ideal,
                DeclType::List
            ]),
            prop::collection::vec(arb_expr(), 0..3)
        )
            .prop_map(|(ty, init)| StmtKind::Decl {
                ty,
                name: "v".into(),
                init
            }),
        arb_expr().prop_map(StmtKind::Minpoly),
        Just(StmtKind::Quit),
    ]
    .prop_map(move |kind| Stmt { kind, pos });
    let looped =
        (arb_expr(), prop::collection::vec(stmt.clone(), 0..3)).prop_map(move |(cond, body)| {
            Stmt {
                kind: StmtKind::For {
                    init: Box::new(Stmt {
                        kind: StmtKind::Assign {
                            name: "n".into(),
                            value: Expr {
                                kind: ExprKind::Int(3),
                                pos,
                            },
                        },
                        pos,
                    }),
                    cond,
                    step: Box::new(Stmt {
                        kind: StmtKind::Assign {
                            name: "n".into(),
                            value: Expr {
                                kind: ExprKind::Int(0),
                                pos,
                            },
                        },
                        pos,
                    }),
                    body,
                },
                pos,
            }
        });
    prop::collection::vec(
        prop_oneof![
            stmt.clone(),
            looped,
            prop::collection::vec(stmt, 0..3).prop_map(move |b| Stmt {
                kind: StmtKind::Block(b),
                pos
            })
        ],
        0..6,
    )
    .prop_map(|statements| Script { statements })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parse_inverts_render(script in arb_script()) {
        let text = script.render();
        let parsed = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&parsed, &script, "{}", text);
        prop_assert_eq!(parsed.render(), text);
    }
}
