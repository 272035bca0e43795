//! Command-line verification harness: run named checks at chosen sizes
//! and emit human-readable or machine-readable reports with certificates.

use clap::{Parser, ValueEnum};
use nilcox::report::{CheckData, CheckReport};
use nilcox::{algebra, bialgebra, decat, functor, wreath};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "nilcox",
    about = "Exact verification of the bimodule calculus of nilCoxeter algebras"
)]
struct Cli {
    /// Name of the check to run, or "all" for every registered check
    check: String,

    /// Size parameter (meaning depends on the check; defaults are the
    /// largest sizes the standard bounds allow)
    #[arg(long)]
    n: Option<usize>,

    /// Block sizes, comma separated (e.g. --block 1,1,1,1 for mackey
    /// or pentagon, --block 1,2 for leibniz or wreath-weyl)
    #[arg(long, value_delimiter = ',')]
    block: Vec<usize>,

    /// Seed for randomized probe modules
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Safety bound on the largest algebra/bimodule dimension a check
    /// may touch (env NILCOX_MAX_DIM overrides the default 5040)
    #[arg(long)]
    max_dim: Option<usize>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

struct Ctx {
    n: Option<usize>,
    block: Vec<usize>,
    seed: u64,
    max_dim: usize,
}

impl Ctx {
    fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }
}

struct Check {
    name: &'static str,
    paper_ref: &'static str,
    /// (params used, largest dimension the run will touch, runner)
    plan: fn(&Ctx) -> (BTreeMap<String, serde_json::Value>, usize, Box<dyn FnOnce() -> CheckData>),
}

fn params(pairs: &[(&str, serde_json::Value)]) -> BTreeMap<String, serde_json::Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn registry() -> Vec<Check> {
    vec![
        Check {
            name: "weyl",
            paper_ref: "restriction composed with induction decomposes as the regular bimodule plus induction composed with restriction: D_{n+1} ⊗ X_n ≅ A_n ⊕ X_{n-1} ⊗ D_n",
            plan: |ctx| {
                let n = ctx.n_or(5);
                let seed = ctx.seed;
                (
                    params(&[("n", n.into()), ("seed", seed.into())]),
                    factorial(n + 1),
                    Box::new(move || {
                        let mut data = CheckData::pass();
                        for m in 1..=n {
                            data = data.merge(functor::weyl_relation_check(m, false));
                        }
                        data.merge(functor::functor_weyl_check(n.min(3), seed, false))
                    }),
                )
            },
        },
        Check {
            name: "graded-weyl",
            paper_ref: "the graded refinement shifts the composite summand by one degree: D_{n+1} ⊗ X_n ≅ A_n ⊕ (X_{n-1} ⊗ D_n){1}, categorifying ∂x = qx∂ + 1",
            plan: |ctx| {
                let n = ctx.n_or(5);
                let seed = ctx.seed;
                (
                    params(&[("n", n.into()), ("seed", seed.into())]),
                    factorial(n + 1),
                    Box::new(move || {
                        let mut data = CheckData::pass();
                        for m in 1..=n {
                            data = data.merge(functor::weyl_relation_check(m, true));
                        }
                        data.merge(functor::functor_weyl_check(n.min(3), seed, true))
                    }),
                )
            },
        },
        Check {
            name: "adjunction",
            paper_ref: "induction is left adjoint to restriction, and multiplication is left adjoint to comultiplication: Hom(F_X M, N) ≅ Hom(M, F_D N)",
            plan: |ctx| {
                let n = ctx.n_or(3);
                let seed = ctx.seed;
                (
                    params(&[("n", n.into()), ("seed", seed.into())]),
                    factorial(n + 1),
                    Box::new(move || {
                        functor::adjunction_check(n, seed, false)
                            .merge(bialgebra::m_delta_adjunction_check(n + 1, seed, false))
                    }),
                )
            },
        },
        Check {
            name: "twisted-adjunction",
            paper_ref: "the other adjunction holds after twisting by the longest-word automorphism: Hom(N, F_X M) ≅ Hom(Ψ F_D Ψ N, M)",
            plan: |ctx| {
                let n = ctx.n_or(3);
                let seed = ctx.seed;
                (
                    params(&[("n", n.into()), ("seed", seed.into())]),
                    factorial(n + 1),
                    Box::new(move || {
                        functor::adjunction_check(n, seed, true)
                            .merge(bialgebra::m_delta_adjunction_check(n + 1, seed, true))
                    }),
                )
            },
        },
        Check {
            name: "duality",
            paper_ref: "the dual of induction is restriction twisted by the Nakayama automorphism: X_n* ≅ D_{n+1} ⊗ A_{n+1}^ψ, and the duality functor Ω squares to the identity",
            plan: |ctx| {
                let n = ctx.n_or(3);
                let seed = ctx.seed;
                (
                    params(&[("n", n.into()), ("seed", seed.into())]),
                    factorial(n + 1),
                    Box::new(move || functor::duality_checks(n, seed)),
                )
            },
        },
        Check {
            name: "integral",
            paper_ref: "the integration bimodule is a one-sided inverse to differentiation: D_{n+1} ⊗ I_n ≅ A_n, but I ⊗ D is not the identity",
            plan: |ctx| {
                let n = ctx.n_or(4);
                let seed = ctx.seed;
                (
                    params(&[("n", n.into()), ("seed", seed.into())]),
                    factorial(n + 1),
                    Box::new(move || functor::integral_checks(n, seed)),
                )
            },
        },
        Check {
            name: "mackey",
            paper_ref: "restriction of an induced bimodule decomposes by double cosets: ⊕_r B_r ≅ A_{n+m}, with summands indexed by the minimal-length representatives Y_{w(r)}",
            plan: |ctx| {
                if ctx.block.len() == 4 {
                    let (n, m, k, l) = (ctx.block[0], ctx.block[1], ctx.block[2], ctx.block[3]);
                    (
                        params(&[("block", serde_json::json!([n, m, k, l]))]),
                        factorial(n + m),
                        Box::new(move || bialgebra::mackey_check(n, m, k, l)),
                    )
                } else {
                    let total = ctx.n_or(5);
                    (
                        params(&[("total_max", total.into())]),
                        factorial(total),
                        Box::new(move || bialgebra::mackey_sweep(total)),
                    )
                }
            },
        },
        Check {
            name: "leibniz",
            paper_ref: "restriction interacts with induction by a Leibniz rule: Δ ∘ F_X twists into (F_X ⊗ 1) ∘ Δ + (1 ⊗ F_X) ∘ Δ at the level of classes",
            plan: |ctx| {
                let (n, m) = if ctx.block.len() == 2 {
                    (ctx.block[0], ctx.block[1])
                } else {
                    (1, 1)
                };
                let seed = ctx.seed;
                (
                    params(&[("block", serde_json::json!([n, m])), ("seed", seed.into())]),
                    factorial(n + m + 1),
                    Box::new(move || bialgebra::leibniz_check(n, m, seed)),
                )
            },
        },
        Check {
            name: "pentagon",
            paper_ref: "the multiplication bimodules are associative up to coherent isomorphism: the pentagon of associators commutes exactly",
            plan: |ctx| {
                if ctx.block.len() == 4 {
                    let (a, b, c, d) = (ctx.block[0], ctx.block[1], ctx.block[2], ctx.block[3]);
                    (
                        params(&[("block", serde_json::json!([a, b, c, d]))]),
                        factorial(a + b + c + d),
                        Box::new(move || bialgebra::pentagon_check(a, b, c, d)),
                    )
                } else {
                    let total = ctx.n_or(5);
                    (
                        params(&[("total_max", total.into())]),
                        factorial(total),
                        Box::new(move || bialgebra::pentagon_sweep(total)),
                    )
                }
            },
        },
        Check {
            name: "quasi-comm",
            paper_ref: "multiplication and comultiplication are commutative up to the longest-word twist: swapping the blocks of M (or Δ) agrees with conjugating by ψ",
            plan: |ctx| {
                let (n, m) = if ctx.block.len() == 2 {
                    (ctx.block[0], ctx.block[1])
                } else {
                    (1, 2)
                };
                let seed = ctx.seed;
                (
                    params(&[("block", serde_json::json!([n, m])), ("seed", seed.into())]),
                    factorial(n + m),
                    Box::new(move || bialgebra::quasi_commutativity_check(n, m, seed)),
                )
            },
        },
        Check {
            name: "unit-counit",
            paper_ref: "the trivial block is a unit for multiplication and the counit for comultiplication: J(1, N) ≅ N ≅ J(N, 1), and the counit kills positive blocks",
            plan: |ctx| {
                let m = ctx.n_or(3);
                let seed = ctx.seed;
                (
                    params(&[("m_max", m.into()), ("seed", seed.into())]),
                    factorial(m),
                    Box::new(move || bialgebra::unit_counit_check(m, seed)),
                )
            },
        },
        Check {
            name: "decat",
            paper_ref: "Grothendieck classes realize the (quantum) Weyl algebra on polynomials: [P_n] = x^n, [F_X] = x, [F_D] = ∂, ∂x = qx∂ + 1, and Δ sends x to x⊗1 + q·1⊗x",
            plan: |ctx| {
                let n = ctx.n_or(4);
                let seed = ctx.seed;
                (
                    params(&[("n", n.into()), ("seed", seed.into())]),
                    factorial(n + 1),
                    Box::new(move || {
                        decat::verify_decategorification(n, seed)
                            .merge(bialgebra::delta_class_check(n.min(3), seed))
                    }),
                )
            },
        },
        Check {
            name: "frobenius",
            paper_ref: "the nilCoxeter algebra is Frobenius: the trace form tr(ab) is nondegenerate, i.e. the Gram matrix has full rank n!",
            plan: |ctx| {
                let n = ctx.n_or(5);
                (
                    params(&[("n", n.into())]),
                    factorial(n),
                    Box::new(move || algebra::frobenius_check(n)),
                )
            },
        },
        Check {
            name: "nakayama",
            paper_ref: "the Nakayama automorphism of the trace form is the longest-word twist ψ: tr(ab) = tr(ψ(b)a) for all a, b",
            plan: |ctx| {
                let n = ctx.n_or(5);
                (
                    params(&[("n", n.into())]),
                    factorial(n),
                    Box::new(move || algebra::nakayama_check(n)),
                )
            },
        },
        Check {
            name: "divided-diff",
            paper_ref: "divided difference operators realize the defining relations: squares vanish, distant operators commute, adjacent operators braid",
            plan: |ctx| {
                let deg = ctx.n_or(6) as u32;
                (
                    params(&[("max_vars", 4.into()), ("max_deg", deg.into())]),
                    0,
                    Box::new(move || algebra::divided_difference_check(4, deg)),
                )
            },
        },
        Check {
            name: "indecomposable",
            paper_ref: "the canonical-basis bimodules A_{m+k-n} ⊗_{A_{k-n}} A_k are indecomposable",
            plan: |ctx| {
                let bound = ctx.n_or(48).min(ctx.max_dim);
                (
                    params(&[("max_dim", bound.into())]),
                    bound,
                    Box::new(move || functor::canonical_basis_check(bound)),
                )
            },
        },
        Check {
            name: "wreath-weyl",
            paper_ref: "for the nil wreath product the Weyl relation acquires k identity summands: D_{n+1}(k) ⊗ X_n(k) ≅ ⊕_{j<k} A_n(k){j} ⊕ (X_{n-1}(k) ⊗ D_n(k)){1}",
            plan: |ctx| {
                if ctx.block.len() == 2 {
                    let (n, k) = (ctx.block[0], ctx.block[1]);
                    (
                        params(&[("block", serde_json::json!([n, k]))]),
                        factorial(n + 1) * k.pow((n + 1) as u32),
                        Box::new(move || wreath::wreath_weyl_check(n, k)),
                    )
                } else {
                    let cases = [(0, 2), (1, 2), (1, 3), (2, 2)];
                    (
                        params(&[("cases", serde_json::json!(cases))]),
                        cases
                            .iter()
                            .map(|&(n, k): &(usize, usize)| {
                                factorial(n + 1) * k.pow((n + 1) as u32)
                            })
                            .max()
                            .unwrap(),
                        Box::new(move || {
                            let mut data = CheckData::pass();
                            for (n, k) in cases {
                                data = data.merge(wreath::wreath_weyl_check(n, k));
                            }
                            data
                        }),
                    )
                }
            },
        },
        Check {
            name: "wreath-frobenius",
            paper_ref: "the nil wreath product A_n(k) has dimension n!·k^n and its trace form (coefficient of the top element) is nondegenerate",
            plan: |ctx| {
                let bound = ctx.n_or(100).min(ctx.max_dim);
                (
                    params(&[("max_dim", bound.into())]),
                    bound,
                    Box::new(move || wreath::wreath_frobenius_check(bound)),
                )
            },
        },
    ]
}

fn run_check(check: &Check, ctx: &Ctx) -> CheckReport {
    let (params, needed, runner) = (check.plan)(ctx);
    let start = Instant::now();
    let data = if needed > ctx.max_dim {
        CheckData::fail(format!(
            "dimension bound exceeded: check needs dimension {needed} > max-dim {}",
            ctx.max_dim
        ))
    } else {
        runner()
    };
    CheckReport {
        check: check.name.to_string(),
        params,
        paper_ref: check.paper_ref.to_string(),
        verdict: if data.pass { "pass" } else { "fail" }.to_string(),
        certificate: data.certificate,
        witness: data.witness,
        dims: data.dims,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn main() {
    let cli = Cli::parse();
    let max_dim = cli
        .max_dim
        .or_else(|| {
            std::env::var("NILCOX_MAX_DIM")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(5040);
    let ctx = Ctx {
        n: cli.n,
        block: cli.block,
        seed: cli.seed,
        max_dim,
    };

    let registry = registry();
    let selected: Vec<&Check> = if cli.check == "all" {
        registry.iter().collect()
    } else {
        match registry.iter().find(|c| c.name == cli.check) {
            Some(c) => vec![c],
            None => {
                let names: Vec<&str> = registry.iter().map(|c| c.name).collect();
                eprintln!(
                    "unknown check '{}'; registered checks: all, {}",
                    cli.check,
                    names.join(", ")
                );
                std::process::exit(2);
            }
        }
    };

    let reports: Vec<CheckReport> = selected.iter().map(|c| run_check(c, &ctx)).collect();
    let all_pass = reports.iter().all(|r| r.verdict == "pass");

    match cli.format {
        Format::Json => {
            if reports.len() == 1 {
                println!("{}", serde_json::to_string_pretty(&reports[0]).unwrap());
            } else {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            }
        }
        Format::Text => {
            for r in &reports {
                println!("{}", r.text());
            }
        }
    }

    std::process::exit(if all_pass { 0 } else { 1 });
}
