//! Randomized search for Leech witnesses `N = E(O) w`.
//!
//! Candidate `i` draws its word from a ChaCha stream keyed by `(seed, i)`,
//! so results do not depend on the thread count. Candidates are screened
//! with exact `Map8` arithmetic (order of `t_M t_N`, rank of `M + N`) in
//! parallel, then fully verified in index order; the first candidate that
//! passes every check wins.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::pair::{PairRecord, Witness};
use super::table::TableRow;
use super::verify::{verify_pair, VerificationReport};
use crate::exact::IntMatrix;
use crate::leech::{self, Map8, WordStep};

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("row {0} does not embed in the Leech lattice")]
    NotInLeech(String),
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub seed: u64,
    /// Candidates per frame.
    pub budget: usize,
    /// Octads tried for `M = E(O)`, in order.
    pub frames: Vec<u32>,
    pub batch: usize,
}

impl SearchConfig {
    pub fn new(seed: u64, budget: usize) -> Self {
        SearchConfig {
            seed,
            budget,
            frames: vec![leech::octad_o1(), leech::octad_o2()],
            batch: 512,
        }
    }
}

pub struct SearchOutcome {
    pub record: PairRecord,
    pub report: VerificationReport,
    pub candidate: usize,
    pub log: Vec<String>,
}

/// Random element of the monomial group: a code automorphism, then a
/// sign change on a random codeword.
fn random_monomial(rng: &mut ChaCha8Rng, out: &mut Vec<WordStep>) {
    let perm = leech::random_automorphism(rng);
    out.push(WordStep::Perm(perm.to_vec()));
    let words = leech::golay().words();
    let w = words[rng.gen_range(0..words.len())];
    if w != 0 {
        out.push(WordStep::Sign(w));
    }
}

/// `m_0 (xi m_1)^k` with `k` in `0..=3`.
pub fn random_word(rng: &mut ChaCha8Rng) -> Vec<WordStep> {
    let k = rng.gen_range(0..=3);
    let mut word = Vec::new();
    random_monomial(rng, &mut word);
    for _ in 0..k {
        word.push(WordStep::Xi);
        random_monomial(rng, &mut word);
    }
    word
}

pub fn candidate_rng(seed: u64, frame: u32, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(frame) << 32));
    rng.set_stream(i as u64);
    rng
}

pub fn sign_map(octad: u32) -> Map8 {
    leech::Monomial {
        perm: leech::Monomial::identity().perm,
        signs: octad,
    }
    .map8()
}

/// Cheap exact screen: order of `t_M t_N`, rank of `M + N` and, for the
/// `DIH8(16, P)` rows, the rank of `ann_M(N)`.
pub fn screen(m_rows: &[Vec<i64>], t_m: &Map8, w: &Map8, target: &TableRow) -> bool {
    let t_n = w.transpose().mul(t_m).mul(w);
    let g = t_m.mul(&t_n);
    if g.order(6) != Some(target.order_of_g()) {
        return false;
    }
    let n_rows: Vec<Vec<i64>> = m_rows
        .iter()
        .map(|r| w.apply(r).expect("Leech isometries keep Leech vectors integral"))
        .collect();
    if let Some(p) = &target.ann {
        let want = if p == "0" { 0 } else { 4 };
        let cross: Vec<Vec<i64>> = m_rows
            .iter()
            .map(|a| n_rows.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
            .collect();
        if m_rows.len() - IntMatrix::from_rows(n_rows.len(), &cross).to_rat().rank() != want {
            return false;
        }
    }
    let rows: Vec<Vec<i64>> = m_rows.iter().chain(&n_rows).cloned().collect();
    IntMatrix::from_rows(24, &rows).to_rat().rank() == target.rank
}

pub fn search_in_leech(target: &TableRow, cfg: &SearchConfig) -> Result<Option<SearchOutcome>, SearchError> {
    if !target.in_leech {
        return Err(SearchError::NotInLeech(target.name.clone()));
    }
    let mut log = Vec::new();
    for &frame in &cfg.frames {
        let m = leech::e_octad(frame).expect("frame is an octad");
        let m_rows = m.basis().to_i64_rows();
        let t_m = sign_map(frame);
        let mut screened = 0usize;
        let mut start = 0usize;
        while start < cfg.budget {
            let end = (start + cfg.batch).min(cfg.budget);
            let hits: Vec<(usize, Vec<WordStep>)> = (start..end)
                .into_par_iter()
                .filter_map(|i| {
                    let mut rng = candidate_rng(cfg.seed, frame, i);
                    let word = random_word(&mut rng);
                    let w = leech::word_map8(&word).ok()?;
                    screen(&m_rows, &t_m, &w, target).then_some((i, word))
                })
                .collect();
            screened += hits.len();
            for (i, word) in hits {
                let witness = Witness {
                    frame_octad: frame,
                    word,
                };
                let Ok(record) = PairRecord::from_witness(&target.name, witness) else {
                    continue;
                };
                let report = verify_pair(&record, target);
                if report.passed() {
                    log.push(format!(
                        "frame {frame:#08x}: candidate {i} accepted after {screened} screened"
                    ));
                    return Ok(Some(SearchOutcome {
                        record,
                        report,
                        candidate: i,
                        log,
                    }));
                }
            }
            start = end;
        }
        log.push(format!(
            "frame {frame:#08x}: budget {} exhausted, {screened} passed the screen",
            cfg.budget
        ));
    }
    Ok(None)
}
