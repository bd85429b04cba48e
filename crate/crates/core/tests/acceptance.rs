//! Acceptance suite: fourteen exact checks, each with a wall-clock limit.
//! Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use schubert_core::bruhat::{self, IntervalKind};
use schubert_core::poly::{self, Coeff, SparsePolynomial};
use schubert_core::tabx::{self, Partition, Tableau};
use schubert_core::verify::{self, Report};
use schubert_core::{qorder, Permutation, VarSplit};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn p(s: &str) -> Permutation {
    s.parse().expect("valid permutation")
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

fn require(ok: bool, msg: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passed(r: &Report) -> Outcome {
    match r.failures.first() {
        None if r.instances > 0 => Ok(()),
        None => Err(format!("{}: no instances checked", r.checker)),
        Some(f) => Err(format!(
            "{}: {} failures, first {} ({})",
            r.checker,
            r.failures.len(),
            f.witness,
            f.reason
        )),
    }
}

const S_413652: &str = "x1^4*x2*x4*x5 + x1^3*x2^2*x4*x5 + x1^3*x2*x4^2*x5 \
    + x1^4*x2*x3*x4 + x1^4*x2*x3*x5 + x1^4*x3*x4*x5 \
    + x1^3*x2^2*x3*x4 + x1^3*x2^2*x3*x5 + x1^3*x2*x3^2*x4 \
    + x1^3*x2*x3^2*x5 + x1^3*x2*x3*x4^2 \
    + x1^3*x3^2*x4*x5 + x1^3*x3*x4^2*x5 \
    + 2*x1^3*x2*x3*x4*x5";

fn c1_schubert_413652() -> Outcome {
    let listed: SparsePolynomial = S_413652.parse().map_err(|e| format!("{e}"))?;
    let s = poly::schubert(&p("413652"));
    require(*s == listed, format!("computed {s}"))?;
    require(s.len() == 14, format!("{} monomials", s.len()))?;
    let m: SparsePolynomial = "x1^3*x2*x3*x4*x5".parse().unwrap();
    let (mono, _) = m.leading_term().unwrap();
    require(s.coefficient(mono) == Coeff::from(2), "coefficient of x1^3x2x3x4x5")?;
    let image = poly::expand_in_schubert(&poly::psi_p(&s, 3)).map_err(|e| e.to_string())?;
    let expected: poly::SchubertExpansion = [(p("52341"), Coeff::from(1)), (p("42531"), Coeff::from(1))]
        .into_iter()
        .collect();
    require(image == expected, format!("Ψ_3 gives {image}"))
}

fn c2_six_chains() -> Outcome {
    let (u, w) = (p("312645"), p("561234"));
    for lambda in Partition::all_of_size(4) {
        let c = if lambda.len() <= 2 {
            poly::structure_constant(&u, &Permutation::grassmannian(&lambda, 2).unwrap(), &w)
                .map_err(|e| e.to_string())?
        } else {
            Coeff::from(0)
        };
        let expected = [part(&[4]), part(&[3, 1]), part(&[2, 2])].contains(&lambda) as u32;
        require(c == Coeff::from(expected), format!("λ={lambda}: {c}"))?;
    }
    let iv = bruhat::interval(&u, &w, IntervalKind::KBruhat(2)).map_err(|e| e.to_string())?;
    require(iv.chain_count() == Coeff::from(6), format!("{} chains", iv.chain_count()))?;
    let tableaux = verify::recording_tableaux(&iv, 2);
    let distinct: BTreeSet<String> = tableaux.iter().map(Tableau::to_string).collect();
    let omitted = Tableau::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
    require(tableaux.len() == 6, "six recording tableaux")?;
    require(!tableaux.contains(&omitted), "tableau 12/34 appears")?;
    require(distinct.len() == 5, format!("{} distinct tableaux", distinct.len()))
}

fn c3_chain_identity() -> Outcome {
    for mask in 0u32..8 {
        let colours: Vec<u32> = (1..=3).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        passed(&verify::check_chain_identity(4, &colours))?;
    }
    Ok(())
}

fn c4_k_bruhat() -> Outcome {
    passed(&verify::check_k_bruhat_equiv(5))
}

fn c5_greedy() -> Outcome {
    passed(&verify::check_greedy_chains(5))
}

fn c6_rank() -> Outcome {
    let zeta = p("(2,4)(1,5,3)");
    require(qorder::rank(&zeta) == 5, format!("rank {}", qorder::rank(&zeta)))?;
    require(p("45123").length() - p("21345").length() == 5, "length difference")?;
    require(zeta.compose(&p("21345")) == p("45123"), "ζ·21345")?;
    passed(&verify::check_rank_formula(5))
}

fn c7_skew_pair() -> Outcome {
    let r = verify::check_skew_pair(
        (&p("21345"), &p("45123"), 2),
        (&p("3215764"), &p("5273461"), 3),
    );
    passed(&r)?;
    require(r.instances >= 4, format!("{} instances", r.instances))
}

fn c8_order() -> Outcome {
    passed(&verify::check_order_properties(4))?;
    passed(&verify::check_order_witnesses(4, 6))
}

fn c9_cyclic() -> Outcome {
    passed(&verify::check_cyclic_shift(4))?;
    passed(&verify::check_cyclic_example(2))
}

fn c10_disjoint() -> Outcome {
    let first = verify::check_disjointness(&p("(1,2)"), &p("(3,4)"));
    passed(&first)?;
    for lambda in [part(&[2]), part(&[1, 1])] {
        let c = poly::skew_coefficient(&p("(1,2)(3,4)"), &lambda).map_err(|e| e.to_string())?;
        require(c == Coeff::from(1), format!("c_{lambda} = {c}"))?;
    }
    let pairs = verify::sample_disjoint_pairs(10, 4, 6, 20);
    require(pairs.len() == 10, format!("sampled {} pairs", pairs.len()))?;
    for (zeta, eta) in &pairs {
        passed(&verify::check_disjointness(zeta, eta))?;
    }
    Ok(())
}

fn c11_deletion() -> Outcome {
    passed(&verify::check_deletion_theorem(5))?;
    let targets = bruhat::pieri_targets(&p("413652"), 3);
    let of_form: Vec<&Permutation> = targets.iter().filter(|w| w.apply(3) == 1).collect();
    require(
        of_form == vec![&p("531642"), &p("631452")],
        format!("ε_(3,1) targets {of_form:?}"),
    )?;
    require(
        p("52341").insert_at(3, 1) == p("631452") && p("42531").insert_at(3, 1) == p("531642"),
        "ε_(3,1) images",
    )
}

fn c12_expansion() -> Outcome {
    passed(&verify::check_expansion(5, 100, 12, 4))
}

fn c13_psi_prefix() -> Outcome {
    passed(&verify::check_psi_set(4, &VarSplit::prefix(4)))
}

fn c14_words() -> Outcome {
    passed(&verify::check_tableau_words(8, 4))?;
    let t_star = Tableau::new(vec![
        vec![1, 2, 2, 5, 8],
        vec![3, 4, 6, 6],
        vec![5, 7, 8],
        vec![7, 8, 9],
    ])
    .unwrap();
    let word = tabx::diagonal_word(&t_star).map_err(|e| e.to_string())?;
    let expected = vec![7, 5, 8, 3, 7, 9, 1, 4, 8, 2, 6, 2, 6, 5, 8];
    require(word.0 == expected, format!("diagonal word {word}"))?;
    require(tabx::schensted(&word).0 == t_star, "insertion of the diagonal word")?;
    require(tabx::schensted(&tabx::reading_word(&t_star)).0 == t_star, "insertion of the reading word")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("1 Schubert polynomial of 413652 and Ψ_3", Duration::from_secs(1), c1_schubert_413652),
        ("2 six-chain interval [312645,561234]_2", Duration::from_secs(5), c2_six_chains),
        ("3 I-chain identity on S_4", Duration::from_secs(120), c3_chain_identity),
        ("4 k-Bruhat conditions vs covers on S_5", Duration::from_secs(120), c4_k_bruhat),
        ("5 greedy chains on S_5", Duration::from_secs(120), c5_greedy),
        ("6 closed-form rank", Duration::from_secs(60), c6_rank),
        ("7 shape-equivalent intervals and coefficients", Duration::from_secs(30), c7_skew_pair),
        ("8 graded order properties on S_4", Duration::from_secs(60), c8_order),
        ("9 cyclic shift", Duration::from_secs(60), c9_cyclic),
        ("10 disjoint products", Duration::from_secs(60), c10_disjoint),
        ("11 deletion theorem on S_5", Duration::from_secs(300), c11_deletion),
        ("12 expansion engine", Duration::from_secs(120), c12_expansion),
        ("13 prefix substitution positivity", Duration::from_secs(60), c13_psi_prefix),
        ("14 Schensted and tableau words", Duration::from_secs(60), c14_words),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            require(
                took <= limit,
                format!("took {:.2}s, limit {}s", took.as_secs_f64(), limit.as_secs()),
            )
        });
        match outcome {
            Ok(()) => println!("PASS {name} ({:.2}s)", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name} ({:.2}s): {msg}", took.as_secs_f64());
            }
        }
    }
    println!("{} of 14 criteria passed", 14 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
