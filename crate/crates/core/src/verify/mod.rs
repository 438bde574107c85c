//! Verification cases: build a complex, compute its homology by brute force
//! and compare with the closed-form prediction.

mod report;

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{forest_complex_with_budget, polyhedral_join, PairFamily, SimplicialComplex};
use crate::error::{Error, Result};
use crate::formula::{self, Prediction, Term};
use crate::graph::{lex_product, DegreeBound, Graph};
use crate::homology::{reduced_betti, BettiVector, Degree};

pub use report::{reports_from_json, reports_to_csv, reports_to_json, write_artifacts};

/// One check, keyed by theorem id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "theorem", rename_all = "kebab-case")]
pub enum VerificationCase {
    /// Polyhedral join over `sk_d Δ^n` with `r` points per vertex.
    FSkeleton { d: u32, r: u32, n: u32 },
    /// `F_0(P_n ∘ H)`.
    PnLex { n: u32, h: String },
    /// `F_0(G ∘ H)` via the suspension splitting.
    SuspF0 { g: String, h: String },
    /// `F_d(K_2 ∘ G)`.
    K2Join { g: String, d: DegreeBound },
    Star { n: u32, r: u32, d: DegreeBound },
    Bipartite { n: u32, m: u32, r: u32, d: DegreeBound },
    Multipartite { parts: Vec<u32>, r: u32, d: DegreeBound },
    /// `F_0(G ∘ H_1)` and `F_0(G ∘ H_2)` have the same homology when
    /// `F_0(H_1)` and `F_0(H_2)` do.
    HInvariance { g: String, h1: String, h2: String },
    /// `F_0(G ∘ H)` equals the polyhedral join of `(F_0(H), {∅})` over `F_0(G)`.
    PolyjoinIdentity { g: String, h: String },
}

impl VerificationCase {
    pub fn theorem_id(&self) -> &'static str {
        match self {
            VerificationCase::FSkeleton { .. } => "f-skeleton",
            VerificationCase::PnLex { .. } => "pn-lex",
            VerificationCase::SuspF0 { .. } => "susp-f0",
            VerificationCase::K2Join { .. } => "k2-join",
            VerificationCase::Star { .. } => "star",
            VerificationCase::Bipartite { .. } => "bipartite",
            VerificationCase::Multipartite { .. } => "multipartite",
            VerificationCase::HInvariance { .. } => "h-invariance",
            VerificationCase::PolyjoinIdentity { .. } => "polyjoin-identity",
        }
    }

    /// Check parameter ranges and graph expressions without building anything large.
    pub fn validate(&self) -> Result<()> {
        match self {
            VerificationCase::FSkeleton { d, r, n } => formula::predict_f_skeleton(*d, *r, *n).map(drop),
            VerificationCase::PnLex { n, h } => {
                if *n < 1 {
                    return Err(Error::Domain("P_n needs n >= 1".into()));
                }
                h.parse::<Graph>().map(drop)
            }
            VerificationCase::SuspF0 { g, h } | VerificationCase::PolyjoinIdentity { g, h } => {
                g.parse::<Graph>()?;
                h.parse::<Graph>().map(drop)
            }
            VerificationCase::K2Join { g, d } => {
                if *d == DegreeBound::Finite(0) {
                    return Err(Error::Domain("K2 join lemma needs d >= 1".into()));
                }
                g.parse::<Graph>().map(drop)
            }
            VerificationCase::Star { n, r, d } => formula::predict_star(*n, *r, *d).map(drop),
            VerificationCase::Bipartite { n, m, r, d } => formula::predict_bipartite(*n, *m, *r, *d).map(drop),
            VerificationCase::Multipartite { parts, r, d } => formula::predict_multipartite(parts, *r, *d).map(drop),
            VerificationCase::HInvariance { g, h1, h2 } => {
                g.parse::<Graph>()?;
                h1.parse::<Graph>()?;
                h2.parse::<Graph>().map(drop)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionEntry {
    pub degree: Degree,
    pub divisors: Vec<String>,
}

/// Result of one case. Everything except `millis` is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case: VerificationCase,
    pub target: String,
    /// As stated, i.e. for the `suspended_by`-fold suspension of the target.
    pub predicted: BettiVector,
    pub suspended_by: u32,
    /// Of the target itself.
    pub computed: BettiVector,
    pub torsion: Vec<TorsionEntry>,
    pub torsion_found: bool,
    pub verdict: Verdict,
    pub faces: BTreeMap<Degree, usize>,
    pub terms: Vec<Term>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

impl VerificationReport {
    /// The report with the timing field cleared, for byte-level comparisons.
    pub fn without_timing(&self) -> Self {
        VerificationReport { millis: 0, ..self.clone() }
    }
}

fn faces_by_dim(k: &SimplicialComplex) -> BTreeMap<Degree, usize> {
    k.f_vector().into_iter().enumerate().map(|(i, c)| (i as Degree - 1, c)).collect()
}

fn torsion_entries(b: &BettiVector) -> Vec<TorsionEntry> {
    b.torsion()
        .iter()
        .map(|(&degree, ds)| TorsionEntry { degree, divisors: ds.iter().map(ToString::to_string).collect() })
        .collect()
}

fn f0_of(g: &Graph, budget: Option<usize>) -> Result<SimplicialComplex> {
    forest_complex_with_budget(g, DegreeBound::Finite(0), budget)
}

/// What a case produced before verdict assignment.
struct Outcome {
    target: String,
    prediction: Prediction,
    computed: BettiVector,
    complex: SimplicialComplex,
    /// Overrides the homology comparison (face-set identity).
    agrees: Option<bool>,
    note: Option<String>,
}

fn outcome(prediction: Prediction, complex: SimplicialComplex) -> Result<Outcome> {
    let computed = reduced_betti(&complex)?;
    Ok(Outcome { target: prediction.target.clone(), prediction, computed, complex, agrees: None, note: None })
}

/// The complex whose homology a case computes by brute force: the forest
/// complex of the product graph, or the polyhedral join for `f-skeleton`.
/// For `h-invariance` this is `F_0(G ∘ H_2)`.
pub fn target_complex(case: &VerificationCase, budget: Option<usize>) -> Result<SimplicialComplex> {
    use VerificationCase as C;
    let k_r = |r: u32| Graph::complete(r as usize);
    match case {
        C::FSkeleton { d, r, n } => {
            let base = SimplicialComplex::simplex(*n as usize + 1)?.skeleton(*d as i32)?;
            let family = PairFamily::uniform_empty(&SimplicialComplex::discrete(*r as usize)?, *n as usize + 1)?;
            let z = polyhedral_join(&base, &family)?;
            match budget {
                Some(b) if z.face_count() > b => Err(Error::BudgetExceeded { budget: b }),
                _ => Ok(z),
            }
        }
        C::PnLex { n, h } => f0_of(&lex_product(&Graph::path(*n as usize)?, &h.parse()?)?, budget),
        C::SuspF0 { g, h } | C::PolyjoinIdentity { g, h } | C::HInvariance { g, h2: h, .. } => {
            f0_of(&lex_product(&g.parse()?, &h.parse()?)?, budget)
        }
        C::K2Join { g, d } => forest_complex_with_budget(&lex_product(&Graph::complete(2)?, &g.parse()?)?, *d, budget),
        C::Star { n, r, d } => {
            forest_complex_with_budget(&lex_product(&Graph::star(*n as usize)?, &k_r(*r)?)?, *d, budget)
        }
        C::Bipartite { n, m, r, d } => {
            let base = Graph::complete_multipartite(&[*n as usize, *m as usize])?;
            forest_complex_with_budget(&lex_product(&base, &k_r(*r)?)?, *d, budget)
        }
        C::Multipartite { parts, r, d } => {
            let sizes: Vec<usize> = parts.iter().map(|&n| n as usize).collect();
            forest_complex_with_budget(&lex_product(&Graph::complete_multipartite(&sizes)?, &k_r(*r)?)?, *d, budget)
        }
    }
}

fn f0_betti(expr: &str, budget: Option<usize>) -> Result<BettiVector> {
    reduced_betti(&f0_of(&expr.parse()?, budget)?)
}

fn execute(case: &VerificationCase, budget: Option<usize>) -> Result<Outcome> {
    use VerificationCase as C;
    let prediction = match case {
        C::FSkeleton { d, r, n } => formula::predict_f_skeleton(*d, *r, *n)?,
        C::PnLex { n, h } => formula::predict_pn_lex(*n, &f0_betti(h, budget)?)?,
        C::SuspF0 { g, h } => formula::predict_susp_f0_lex(&g.parse()?, &f0_betti(h, budget)?)?,
        C::K2Join { g, d } => formula::predict_k2_join(&g.parse()?, *d)?,
        C::Star { n, r, d } => formula::predict_star(*n, *r, *d)?,
        C::Bipartite { n, m, r, d } => formula::predict_bipartite(*n, *m, *r, *d)?,
        C::Multipartite { parts, r, d } => formula::predict_multipartite(parts, *r, *d)?,
        C::HInvariance { g, h1, h2 } => {
            let (b1, b2) = (f0_betti(h1, budget)?, f0_betti(h2, budget)?);
            if b1 != b2 {
                return Err(Error::Hypothesis(format!("F_0(H1) has {b1} but F_0(H2) has {b2}")));
            }
            let first = reduced_betti(&f0_of(&lex_product(&g.parse()?, &h1.parse()?)?, budget)?)?;
            Prediction {
                target: "F_0(G o H2)".into(),
                predicted: first.clone(),
                suspended_by: 0,
                assumptions: vec!["F_0(H1) and F_0(H2) have equal homology".into()],
                terms: vec![Term { label: "F_0(G o H1)".into(), count: 1, unit: first }],
            }
        }
        C::PolyjoinIdentity { g, h } => {
            let (g, h): (Graph, Graph) = (g.parse()?, h.parse()?);
            let family = PairFamily::uniform_empty(&f0_of(&h, budget)?, g.order())?;
            let joined = polyhedral_join(&f0_of(&g, budget)?, &family)?;
            let direct = target_complex(case, budget)?;
            let same = direct == joined;
            let predicted = reduced_betti(&joined)?;
            let prediction = Prediction {
                target: "F_0(G o H)".into(),
                predicted: predicted.clone(),
                suspended_by: 0,
                assumptions: vec![],
                terms: vec![Term { label: "polyhedral join".into(), count: 1, unit: predicted }],
            };
            let mut out = outcome(prediction, direct)?;
            out.agrees = Some(same);
            out.note = Some(format!(
                "face sets {}: {} direct, {} via polyhedral join",
                if same { "equal" } else { "differ" },
                out.complex.face_count(),
                joined.face_count()
            ));
            return Ok(out);
        }
    };
    outcome(prediction, target_complex(case, budget)?)
}

/// Run one case. Exceeding the face budget yields a `SKIPPED` report; any
/// other error (bad parameters, failed hypothesis) is returned.
pub fn run_case(case: &VerificationCase, budget: Option<usize>) -> Result<VerificationReport> {
    run_case_perturbed(case, budget, None)
}

/// As [`run_case`], optionally adding one sphere of the given dimension to the
/// prediction so the comparison must fail (harness self-test).
pub fn run_case_perturbed(
    case: &VerificationCase,
    budget: Option<usize>,
    perturb: Option<Degree>,
) -> Result<VerificationReport> {
    case.validate()?;
    let start = Instant::now();
    let out = match execute(case, budget) {
        Ok(out) => out,
        Err(Error::BudgetExceeded { budget }) => {
            return Ok(VerificationReport {
                case: case.clone(),
                target: String::new(),
                predicted: BettiVector::zero(),
                suspended_by: 0,
                computed: BettiVector::zero(),
                torsion: vec![],
                torsion_found: false,
                verdict: Verdict::Skipped,
                faces: BTreeMap::new(),
                terms: vec![],
                note: Some(format!("face budget of {budget} exceeded")),
                millis: start.elapsed().as_millis() as u64,
            });
        }
        Err(e) => return Err(e),
    };
    let mut prediction = out.prediction;
    if let Some(q) = perturb {
        prediction.predicted.add_rank(q, 1);
        prediction.terms.push(Term { label: "perturbation".into(), count: 1, unit: BettiVector::spheres(q, 1) });
    }
    let torsion_found = out.computed.has_torsion();
    let agrees = match out.agrees {
        Some(same) => same && perturb.is_none(),
        None => prediction.matches(&out.computed),
    };
    Ok(VerificationReport {
        case: case.clone(),
        target: out.target,
        predicted: prediction.predicted,
        suspended_by: prediction.suspended_by,
        torsion: torsion_entries(&out.computed),
        computed: out.computed.free_part(),
        torsion_found,
        verdict: if agrees && !torsion_found { Verdict::Pass } else { Verdict::Fail },
        faces: faces_by_dim(&out.complex),
        terms: prediction.terms,
        note: out.note,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// One entry of a sweep configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseEntry {
    #[serde(flatten)]
    pub case: VerificationCase,
    /// Add one sphere of this dimension to the prediction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturb: Option<Degree>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Face-count ceiling applied to every complex built.
    #[serde(default)]
    pub budget: Option<usize>,
    #[serde(default)]
    pub cases: Vec<CaseEntry>,
}

impl SweepConfig {
    /// Parse JSON, or TOML when `toml` is set.
    pub fn parse(text: &str, toml: bool) -> Result<Self> {
        if toml {
            ::toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
        } else {
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
        }
    }

    /// Load from a file; `.toml` files are read as TOML, anything else as JSON.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        SweepConfig::parse(&text, path.extension().is_some_and(|e| e == "toml"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepOutcome {
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Index of the first failing case in configuration order.
    pub first_fail: Option<usize>,
}

impl SweepOutcome {
    /// `0` if nothing failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed > 0)
    }
}

/// Validate every case, then run them in parallel keeping configuration order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    for (i, entry) in config.cases.iter().enumerate() {
        entry.case.validate().map_err(|e| Error::Config(format!("case {i} ({}): {e}", entry.case.theorem_id())))?;
    }
    let reports = config
        .cases
        .par_iter()
        .enumerate()
        .map(|(i, entry)| {
            run_case_perturbed(&entry.case, config.budget, entry.perturb)
                .map_err(|e| Error::Config(format!("case {i} ({}): {e}", entry.case.theorem_id())))
        })
        .collect::<Result<Vec<_>>>()?;
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    Ok(SweepOutcome {
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        skipped: count(Verdict::Skipped),
        first_fail: reports.iter().position(|r| r.verdict == Verdict::Fail),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_json_round_trip() {
        let text = r#"{"theorem":"k2-join","g":"P5","d":1}"#;
        let case: VerificationCase = serde_json::from_str(text).unwrap();
        assert_eq!(case, VerificationCase::K2Join { g: "P5".into(), d: DegreeBound::Finite(1) });
        assert_eq!(serde_json::to_string(&case).unwrap(), text);
        let inf: VerificationCase = serde_json::from_str(r#"{"theorem":"star","n":2,"r":2,"d":"inf"}"#).unwrap();
        assert_eq!(inf, VerificationCase::Star { n: 2, r: 2, d: DegreeBound::Infinite });
    }

    #[test]
    fn toml_config() {
        let cfg = SweepConfig::parse(
            "budget = 1000\n[[cases]]\ntheorem = \"f-skeleton\"\nd = 1\nr = 2\nn = 2\nperturb = 1\n",
            true,
        )
        .unwrap();
        assert_eq!(cfg.budget, Some(1000));
        assert_eq!(cfg.cases[0].perturb, Some(1));
        assert!(SweepConfig::parse("{\"cases\": [{\"theorem\": \"nope\"}]}", false).is_err());
    }

    #[test]
    fn small_cases_pass() {
        let r = run_case(&VerificationCase::FSkeleton { d: 1, r: 2, n: 2 }, None).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.computed, BettiVector::spheres(1, 7));
        let r = run_case(&VerificationCase::PolyjoinIdentity { g: "P3".into(), h: "K2".into() }, None).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn budget_skips() {
        let r = run_case(&VerificationCase::K2Join { g: "P5".into(), d: DegreeBound::Finite(1) }, Some(10)).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
    }

    #[test]
    fn invalid_parameters_are_errors() {
        assert!(run_case(&VerificationCase::Star { n: 2, r: 2, d: DegreeBound::Finite(2) }, None).is_err());
        assert!(run_case(&VerificationCase::PnLex { n: 2, h: "Q3".into() }, None).is_err());
    }
}
