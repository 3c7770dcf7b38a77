//! Random generation of codimension 3 homogeneous ideals.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::groebner::{minimal_generators_from_basis, reduced_groebner_basis, GroebnerBasis, QuotientPresentation};
use crate::inverse::{annihilator_ideal, DualForm};
use crate::monomial::Monomial;
use crate::poly::{random_homogeneous, Ideal, Polynomial};

/// Number of random forms added before a candidate with too few minimal
/// generators is abandoned.
pub const TOP_UP_ATTEMPTS: usize = 10;

/// Parameters of the main routine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub field_char: u32,
    pub check_in: u64,
    /// `[0]` means: draw `mn` degrees from `[low_deg, high_deg]` per attempt.
    pub deg_seq: Vec<u32>,
    pub low_deg: u32,
    pub high_deg: u32,
    pub num_terms: usize,
    pub mn: usize,
    pub use_n: bool,
    pub max_tries: u32,
    pub strict_terms: bool,
    pub max_m: usize,
    pub max_n: usize,
    pub logging: bool,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            field_char: 3,
            check_in: 0,
            deg_seq: vec![0],
            low_deg: 2,
            high_deg: 8,
            num_terms: 0,
            mn: 5,
            use_n: false,
            max_tries: 10,
            strict_terms: false,
            max_m: 12,
            max_n: 10,
            logging: false,
        }
    }
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<()> {
        self.field_spec()?;
        if self.low_deg == 0 {
            return Err(Error::Config("lowDeg must be positive".into()));
        }
        if self.low_deg > self.high_deg {
            return Err(Error::Config(format!(
                "lowDeg {} exceeds highDeg {}",
                self.low_deg, self.high_deg
            )));
        }
        if self.mn == 0 {
            return Err(Error::Config("mn must be positive".into()));
        }
        if self.deg_seq.is_empty() {
            return Err(Error::Config("degSeq must be (0) or a nonempty sequence".into()));
        }
        if !self.uses_random_degrees() && self.deg_seq.contains(&0) {
            return Err(Error::Config(format!(
                "degSeq {} contains a nonpositive degree",
                self.deg_seq_text()
            )));
        }
        Ok(())
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.field_char)
    }

    pub fn uses_random_degrees(&self) -> bool {
        self.deg_seq == [0]
    }

    pub fn deg_seq_text(&self) -> String {
        let parts: Vec<String> = self.deg_seq.iter().map(u32::to_string).collect();
        format!("({})", parts.join(","))
    }

    /// The option echo of the start banner.
    pub fn option_table(&self) -> String {
        format!(
            "new OptionTable from {{maxTries => {}, degSeq => {}, strictTerms => {}, logging => {}, mn => {}, \
             numTerms => {}, highDeg => {}, useN => {}, maxM => {}, maxN => {}, checkIn => {}, fieldChar => {}, \
             lowDeg => {}}}",
            self.max_tries,
            self.deg_seq_text(),
            self.strict_terms,
            self.logging,
            self.mn,
            self.num_terms,
            self.high_deg,
            self.use_n,
            self.max_m,
            self.max_n,
            self.check_in,
            self.field_char,
            self.low_deg
        )
    }
}

/// Why an attempt produced no ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailureReason {
    MingensExhausted,
    CodimMonomial,
    VariablesExhausted,
    MaxTriesExhausted,
    TypeMismatch,
    ValidationFailed,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::MingensExhausted => "mingens-exhausted",
            FailureReason::CodimMonomial => "codim-monomial",
            FailureReason::VariablesExhausted => "variables-exhausted",
            FailureReason::MaxTriesExhausted => "maxtries-exhausted",
            FailureReason::TypeMismatch => "type-mismatch",
            FailureReason::ValidationFailed => "validation-failed",
        })
    }
}

/// Result of one call to the generator: an ideal, or the zero ideal with
/// the reason generation stopped.
#[derive(Clone, Debug)]
pub struct AttemptOutcome<F: Field> {
    pub ideal: Ideal<F>,
    pub failure: Option<FailureReason>,
    /// Gröbner basis of `ideal`, when it was computed along the way.
    pub basis: Option<GroebnerBasis<F>>,
}

impl<F: Field> AttemptOutcome<F> {
    fn failed(field: F, reason: FailureReason) -> Self {
        Self {
            ideal: Ideal::zero(field),
            failure: Some(reason),
            basis: None,
        }
    }
}

/// An ideal generated and tested in one go.
struct Candidate<F: Field> {
    generators: Vec<Polynomial<F>>,
    basis: GroebnerBasis<F>,
    mingens: Vec<Polynomial<F>>,
}

impl<F: Field> Candidate<F> {
    fn new(field: F, generators: Vec<Polynomial<F>>) -> Result<Self> {
        let ideal = Ideal::new(field, generators);
        let basis = reduced_groebner_basis(&ideal)?;
        let mingens = minimal_generators_from_basis(&basis, ideal.max_degree());
        Ok(Self {
            generators: ideal.generators().to_vec(),
            basis,
            mingens,
        })
    }

    fn codim(&self) -> u32 {
        self.basis.codimension()
    }

    fn into_outcome(self, field: F) -> AttemptOutcome<F> {
        AttemptOutcome {
            ideal: Ideal::new(field, self.mingens),
            failure: None,
            basis: Some(self.basis),
        }
    }
}

/// One attempt: an outcome, or the reason it must be retried.
type Attempt<F> = std::result::Result<AttemptOutcome<F>, FailureReason>;

/// A stateful generator: its RNG stream and the `numTries` counter persist
/// across calls and are reset only by a success.
pub struct Sampler<F: Field> {
    field: F,
    cfg: SamplerConfig,
    rng: ChaCha8Rng,
    num_tries: u32,
}

/// Stream `worker` of the generator seeded by `seed`.
pub fn worker_rng(seed: u64, worker: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker);
    rng
}

impl<F: Field> Sampler<F> {
    pub fn new(field: F, cfg: SamplerConfig, rng: ChaCha8Rng) -> Result<Self> {
        cfg.validate()?;
        if cfg.field_spec()? != field.spec() {
            return Err(Error::Config(format!(
                "fieldChar {} does not match the coefficient field",
                cfg.field_char
            )));
        }
        Ok(Self {
            field,
            cfg,
            rng,
            num_tries: 0,
        })
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.cfg
    }

    pub fn num_tries(&self) -> u32 {
        self.num_tries
    }

    pub fn instantiate_degseq(&mut self) -> Vec<u32> {
        if self.cfg.uses_random_degrees() {
            let (lo, hi) = (self.cfg.low_deg, self.cfg.high_deg);
            (0..self.cfg.mn).map(|_| self.rng.gen_range(lo..=hi)).collect()
        } else {
            self.cfg.deg_seq.clone()
        }
    }

    fn random_forms(&mut self, degrees: &[u32]) -> Result<Vec<Polynomial<F>>> {
        degrees
            .iter()
            .map(|&d| random_homogeneous(self.field, d, self.cfg.num_terms, &mut self.rng))
            .collect()
    }

    /// Generates one ideal according to `useN`.
    pub fn generate(&mut self) -> Result<AttemptOutcome<F>> {
        if self.cfg.use_n {
            self.generate_via_inverse_system()
        } else {
            self.generate_candidate()
        }
    }

    pub fn generate_candidate(&mut self) -> Result<AttemptOutcome<F>> {
        self.retry(Self::attempt_candidate)
    }

    pub fn generate_via_inverse_system(&mut self) -> Result<AttemptOutcome<F>> {
        self.retry(Self::attempt_inverse_system)
    }

    fn retry(
        &mut self,
        attempt: fn(&mut Self) -> Result<Attempt<F>>,
    ) -> Result<AttemptOutcome<F>> {
        loop {
            match attempt(self)? {
                Ok(outcome) => {
                    self.num_tries = 0;
                    return Ok(outcome);
                }
                Err(FailureReason::VariablesExhausted) => {
                    return Ok(AttemptOutcome::failed(self.field, FailureReason::VariablesExhausted));
                }
                Err(_) if self.num_tries < self.cfg.max_tries => self.num_tries += 1,
                Err(_) => {
                    return Ok(AttemptOutcome::failed(self.field, FailureReason::MaxTriesExhausted));
                }
            }
        }
    }

    fn attempt_candidate(&mut self) -> Result<std::result::Result<AttemptOutcome<F>, FailureReason>> {
        let field = self.field;
        let mn = self.cfg.mn;
        let degrees = self.instantiate_degseq();
        let mut candidate = Candidate::new(field, self.random_forms(&degrees)?)?;
        let mut top_ups = 0;
        while candidate.mingens.len() < mn && top_ups < TOP_UP_ATTEMPTS {
            let d = *degrees.choose(&mut self.rng).expect("nonempty degree sequence");
            let mut gens = candidate.generators.clone();
            gens.push(random_homogeneous(field, d, self.cfg.num_terms, &mut self.rng)?);
            candidate = Candidate::new(field, gens)?;
            top_ups += 1;
        }
        if candidate.mingens.len() != mn {
            return Ok(Err(FailureReason::MingensExhausted));
        }
        if candidate.codim() == 3 {
            return Ok(Ok(candidate.into_outcome(field)));
        }
        if self.cfg.num_terms == 1 {
            return Ok(Err(FailureReason::CodimMonomial));
        }
        match fix_up(field, &candidate.mingens, mn)? {
            Some(fixed) => Ok(Ok(fixed.into_outcome(field))),
            None => Ok(Err(FailureReason::VariablesExhausted)),
        }
    }

    fn attempt_inverse_system(&mut self) -> Result<std::result::Result<AttemptOutcome<F>, FailureReason>> {
        let field = self.field;
        let degrees = self.instantiate_degseq();
        let forms = self
            .random_forms(&degrees)?
            .into_iter()
            .map(DualForm::new)
            .collect::<Result<Vec<_>>>()?;
        let ideal = annihilator_ideal(&forms, field)?;
        let basis = reduced_groebner_basis(&ideal)?;
        let quotient = QuotientPresentation::from_basis(basis)?;
        if quotient.socle_dimension() != self.cfg.mn {
            return Ok(Err(FailureReason::TypeMismatch));
        }
        Ok(Ok(AttemptOutcome {
            ideal,
            failure: None,
            basis: Some(quotient.groebner_basis().clone()),
        }))
    }
}

/// Adds `v^(deg g_i)` to the generators one at a time, for v = x, y, z in
/// turn (each variable starting again from `gens`), until the ideal has
/// codimension 3 and `mn` minimal generators.
fn fix_up<F: Field>(field: F, gens: &[Polynomial<F>], mn: usize) -> Result<Option<Candidate<F>>> {
    for v in 0..3 {
        let mut current = gens.to_vec();
        for i in 0..current.len() {
            let d = current[i].degree();
            let power = Polynomial::monomial(field, Monomial::power(v, d as u16), field.one());
            current[i] = current[i].add(&power)?;
            let candidate = Candidate::new(field, current.clone())?;
            if candidate.codim() == 3 && candidate.mingens.len() == mn {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}

/// An ideal that passed every gate, with the data computed along the way.
#[derive(Clone, Debug)]
pub struct ValidatedIdeal<F: Field> {
    pub generators: Vec<Polynomial<F>>,
    pub quotient: QuotientPresentation<F>,
    pub socle_dimension: usize,
}

#[derive(Clone, Debug)]
pub enum Validation<F: Field> {
    Pass(Box<ValidatedIdeal<F>>),
    Fail(String),
}

impl<F: Field> Validation<F> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Validation::Pass(_))
    }
}

/// The gates an ideal must pass before classification, evaluated on its
/// minimal generators.
pub fn validate_ideal<F: Field>(ideal: &Ideal<F>, cfg: &SamplerConfig) -> Result<Validation<F>> {
    validate_with_basis(ideal, None, cfg)
}

/// As [`validate_ideal`], reusing a Gröbner basis if one is known.
pub fn validate_outcome<F: Field>(outcome: AttemptOutcome<F>, cfg: &SamplerConfig) -> Result<Validation<F>> {
    validate_with_basis(&outcome.ideal, outcome.basis, cfg)
}

fn validate_with_basis<F: Field>(
    ideal: &Ideal<F>,
    basis: Option<GroebnerBasis<F>>,
    cfg: &SamplerConfig,
) -> Result<Validation<F>> {
    let fail = |msg: String| Ok(Validation::Fail(msg));
    if ideal.is_zero() {
        return fail("zero ideal".into());
    }
    if let Some(g) = ideal
        .generators()
        .iter()
        .find(|g| g.terms().iter().any(|(m, _)| m.degree() != g.degree()))
    {
        return fail(format!("generator {g} is not homogeneous"));
    }
    let basis = match basis {
        Some(b) => b,
        None => reduced_groebner_basis(ideal)?,
    };
    let generators = minimal_generators_from_basis(&basis, ideal.max_degree());
    if cfg.strict_terms && cfg.num_terms > 0 {
        if let Some(g) = generators.iter().find(|g| g.num_terms() != cfg.num_terms) {
            return fail(format!("minimal generator {g} does not have {} terms", cfg.num_terms));
        }
    }
    if basis.codimension() != 3 || basis.elements().iter().any(|g| g.degree() == 0) {
        return fail("codimension is not 3".into());
    }
    if generators.len() > cfg.max_m {
        return fail(format!("{} minimal generators exceed maxM {}", generators.len(), cfg.max_m));
    }
    if let Some(g) = generators.iter().find(|g| g.degree() < 2) {
        return fail(format!("minimal generator {g} has degree below 2"));
    }
    let quotient = QuotientPresentation::from_basis(basis)?;
    let socle_dimension = quotient.socle_dimension();
    if socle_dimension > cfg.max_n {
        return fail(format!("type {socle_dimension} exceeds maxN {}", cfg.max_n));
    }
    Ok(Validation::Pass(Box::new(ValidatedIdeal {
        generators,
        quotient,
        socle_dimension,
    })))
}
