//! Closed-form bounds on β and ζ for the three families, evaluated in exact
//! rational arithmetic, with their preconditions carried as data.
//!
//! Lower bounds are rounded up and upper bounds down to get the integer
//! consequence. Lower bounds below 1 are raised to 1 and marked `clamped`:
//! a graph on two or more vertices needs at least one landmark and one cop.

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::game::{localization_number, LocOptions};
use crate::geometry::er_polarity_graph;
use crate::graph::kneser::{binomial, KneserLabel};
use crate::graph::symmetry::{Symmetry, KNESER_SYMMETRY_MAX_N};
use crate::graph::{cycle_graph, hoffman_singleton, is_moore_diam2, kneser_graph, petersen, Graph};
use crate::hyper::{kneser_resolving_cover, Hypergraph};
use crate::metric::{
    counting_lower_bound, greedy_resolving, kneser_is_resolving, metric_dimension,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quantity {
    #[serde(rename = "beta")]
    Beta,
    #[serde(rename = "zeta")]
    Zeta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Precondition {
    pub text: String,
    pub holds: bool,
}

fn pre(text: impl Into<String>, holds: bool) -> Precondition {
    Precondition {
        text: text.into(),
        holds,
    }
}

fn ratio_str<S: Serializer>(v: &Option<Rational64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// One bound on one quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub quantity: Quantity,
    pub kind: Kind,
    /// The formula's value before rounding, e.g. "35/4".
    #[serde(serialize_with = "ratio_str")]
    pub value: Option<Rational64>,
    /// Integer consequence: ceiling for lower bounds, floor for upper bounds.
    pub bound: Option<i64>,
    pub source: String,
    pub preconditions: Vec<Precondition>,
    /// All preconditions hold; only satisfied entries take part in checks.
    pub satisfied: bool,
    pub clamped: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

impl BoundEntry {
    fn new(
        quantity: Quantity,
        kind: Kind,
        value: Rational64,
        source: &str,
        preconditions: Vec<Precondition>,
    ) -> Self {
        let satisfied = preconditions.iter().all(|p| p.holds);
        let mut bound = match kind {
            Kind::Lower => value.ceil().to_integer(),
            Kind::Upper => value.floor().to_integer(),
            Kind::Exact => value.to_integer(),
        };
        let clamped = kind == Kind::Lower && bound < 1;
        if clamped {
            bound = 1;
        }
        BoundEntry {
            quantity,
            kind,
            value: Some(value),
            bound: Some(bound),
            source: source.to_string(),
            preconditions,
            satisfied,
            clamped,
            flags: Vec::new(),
        }
    }

    fn integer(quantity: Quantity, kind: Kind, value: i64, source: &str) -> Self {
        BoundEntry::new(
            quantity,
            kind,
            Rational64::from_integer(value),
            source,
            Vec::new(),
        )
    }

    /// An entry whose formula does not apply: no value is asserted.
    fn unavailable(
        quantity: Quantity,
        kind: Kind,
        source: &str,
        preconditions: Vec<Precondition>,
    ) -> Self {
        BoundEntry {
            quantity,
            kind,
            value: None,
            bound: None,
            source: source.to_string(),
            satisfied: false,
            preconditions,
            clamped: false,
            flags: Vec::new(),
        }
    }

    fn flag(mut self, text: impl Into<String>) -> Self {
        self.flags.push(text.into());
        self
    }

    fn lower_bound(&self) -> Option<i64> {
        matches!(self.kind, Kind::Lower | Kind::Exact).then_some(self.bound?)
    }

    fn upper_bound(&self) -> Option<i64> {
        matches!(self.kind, Kind::Upper | Kind::Exact).then_some(self.bound?)
    }
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn kneser_preconditions(k: usize, n: usize) -> Vec<Precondition> {
    vec![pre("n >= 3k", n >= 3 * k), pre("k >= 3", k >= 3)]
}

/// β(K(k,n)) ≥ n/2 + n/k, or (3n − 1)/4 when k = 4.
///
/// The counting argument behind it needs n ≥ 18 when k = 3; below that the
/// entry is computed but left unsatisfied and flagged.
pub fn kneser_beta_lower(k: usize, n: usize) -> BoundEntry {
    let mut pres = kneser_preconditions(k, n);
    let (ki, ni) = (k as i64, n as i64);
    if !pres.iter().all(|p| p.holds) {
        return BoundEntry::unavailable(Quantity::Beta, Kind::Lower, "kneser_beta_lower", pres);
    }
    pres.push(pre("n >= 18 when k = 3", k != 3 || n >= 18));
    let value = if k == 4 {
        r(3 * ni - 1, 4)
    } else {
        r(ni, 2) + r(ni, ki)
    };
    let e = BoundEntry::new(
        Quantity::Beta,
        Kind::Lower,
        value,
        "kneser_beta_lower",
        pres,
    );
    if k == 3 && n < 18 {
        e.flag("stated for all k >= 3, but the detection-count argument it rests on needs n >= 18 when k = 3")
    } else {
        e
    }
}

/// ζ(K(k,n)) ≥ n/2 + n/k − k/2 − 1, or (3n − 13)/4 when k = 4: the β count
/// applied to the n − k elements outside the robber's last vertex.
pub fn kneser_zeta_lower(k: usize, n: usize) -> BoundEntry {
    let mut pres = kneser_preconditions(k, n);
    let (ki, ni) = (k as i64, n as i64);
    if !pres.iter().all(|p| p.holds) {
        return BoundEntry::unavailable(Quantity::Zeta, Kind::Lower, "kneser_zeta_lower", pres);
    }
    pres.push(pre("n - k >= 18 when k = 3", k != 3 || n >= 18 + k));
    let value = if k == 4 {
        r(3 * ni - 13, 4)
    } else {
        r(ni, 2) + r(ni, ki) - r(ki, 2) - 1
    };
    let mut e = BoundEntry::new(
        Quantity::Zeta,
        Kind::Lower,
        value,
        "kneser_zeta_lower",
        pres,
    );
    if k == 3 && n < 18 + k {
        e = e.flag("the detection-count argument is applied to n - k elements and needs n - k >= 18 when k = 3");
    }
    if n < 4 * k {
        e = e.flag(format!(
            "the detection-count argument is applied to n - k = {} elements, below its own n >= 3k condition",
            n - k
        ));
    }
    e
}

/// Size bound for the gadget cover of [n] by copies of a k-uniform,
/// ⌈k/2 + 1⌉-regular, girth-5 hypergraph on m vertices, with n′ = n mod m.
pub fn kneser_beta_upper(k: usize, n: usize, m: Option<usize>) -> BoundEntry {
    let mut pres = vec![pre("n >= 3k", n >= 3 * k), pre("k >= 3", k >= 3)];
    pres.push(pre("gadget order m known", m.is_some()));
    let Some(m) = m.filter(|_| pres.iter().all(|p| p.holds)) else {
        return BoundEntry::unavailable(
            Quantity::Beta,
            Kind::Upper,
            "kneser_beta_upper_cover",
            pres,
        );
    };
    pres.push(pre("m <= n", m <= n));
    let (ki, ni, mi) = (k as i64, n as i64, m as i64);
    let tail = if n.is_multiple_of(m) { 0 } else { 1 };
    let lead = r(1, 2) + r(1, ki);
    let value = if k.is_multiple_of(2) {
        lead * ni + lead * mi * tail
    } else {
        lead * ni + r(ni, 2 * ki) + (lead + r(1, 2 * ki)) * mi * tail
    };
    BoundEntry::new(
        Quantity::Beta,
        Kind::Upper,
        value,
        "kneser_beta_upper_cover",
        pres,
    )
}

/// Bounds for a k-regular Moore graph of diameter 2 (k ∈ {2, 3, 7, 57}).
pub fn moore_bounds(k: usize) -> Result<Vec<BoundEntry>> {
    use Kind::*;
    use Quantity::*;
    let ki = k as i64;
    match k {
        2 => Ok(vec![
            BoundEntry::integer(Beta, Exact, 2, "cycle_c5"),
            BoundEntry::integer(Zeta, Exact, 2, "cycle_c5"),
        ]),
        3 | 7 | 57 => {
            let mut out = vec![
                BoundEntry::integer(Beta, Lower, ki, "moore_beta_lower"),
                BoundEntry::integer(Beta, Upper, 2 * ki - 3, "moore_beta_construction"),
            ];
            if k == 3 {
                out.push(BoundEntry::integer(
                    Beta,
                    Exact,
                    3,
                    "petersen_metric_dimension",
                ));
                out.push(BoundEntry::integer(Zeta, Exact, 3, "petersen_localization"));
            } else {
                out.push(BoundEntry::integer(
                    Zeta,
                    Lower,
                    ki - 1,
                    "moore_zeta_neighborhood",
                ));
                out.push(BoundEntry::integer(
                    Zeta,
                    Upper,
                    ki,
                    "moore_zeta_staged_strategy",
                ));
            }
            if k == 57 {
                for e in &mut out {
                    e.flags
                        .push("no 57-regular Moore graph is known to exist".into());
                }
            }
            Ok(out)
        }
        _ => Err(Error::invalid(format!(
            "there is no {k}-regular Moore graph of diameter 2"
        ))),
    }
}

pub fn is_prime_power(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q)
        .find(|d| q.is_multiple_of(*d))
        .expect("q >= 2 has a divisor");
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Bounds for a polarity graph of order q² + q + 1.
pub fn polarity_bounds(q: u32) -> Result<Vec<BoundEntry>> {
    use Kind::*;
    use Quantity::*;
    if !is_prime_power(q) {
        return Err(Error::invalid(format!("{q} is not a prime power")));
    }
    let qi = q as i64;
    let pres = || vec![pre("q is a prime power", true)];
    Ok(vec![
        BoundEntry::new(
            Beta,
            Lower,
            Rational64::from_integer(2 * qi - 5),
            "polarity_beta_lower",
            pres(),
        ),
        BoundEntry::new(
            Beta,
            Upper,
            Rational64::from_integer(2 * qi - 1),
            "polarity_beta_construction",
            pres(),
        ),
        BoundEntry::new(Zeta, Lower, r(2 * qi - 5, 3), "polarity_zeta_lower", pres()),
        BoundEntry::new(
            Zeta,
            Upper,
            Rational64::from_integer(2 * qi - 1),
            "polarity_beta_construction",
            pres(),
        )
        .flag("a resolving set locates the robber in one round"),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Target {
    Kneser {
        k: usize,
        n: usize,
    },
    Moore {
        k: usize,
    },
    Polarity {
        q: u32,
    },
    /// Any graph, with only the generic bounds.
    Graph {
        order: usize,
        hash: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub target: Target,
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    /// Tightest satisfied interval for one quantity.
    pub fn interval(&self, q: Quantity) -> (Option<i64>, Option<i64>) {
        let mine = || {
            self.entries
                .iter()
                .filter(move |e| e.quantity == q && e.satisfied)
        };
        (
            mine().filter_map(BoundEntry::lower_bound).max(),
            mine().filter_map(BoundEntry::upper_bound).min(),
        )
    }

    /// Every satisfied lower bound is at most every satisfied upper bound,
    /// and ζ never exceeds β.
    pub fn cross_check(&self) -> Result<()> {
        for q in [Quantity::Beta, Quantity::Zeta] {
            let mine: Vec<&BoundEntry> = self
                .entries
                .iter()
                .filter(|e| e.quantity == q && e.satisfied)
                .collect();
            for lo in mine.iter().filter(|e| e.lower_bound().is_some()) {
                for hi in mine.iter().filter(|e| e.upper_bound().is_some()) {
                    let (a, b) = (lo.lower_bound().unwrap(), hi.upper_bound().unwrap());
                    if a > b {
                        let anchor = if lo.kind == Kind::Exact {
                            &hi.source
                        } else {
                            &lo.source
                        };
                        return Err(Error::BoundContradiction {
                            anchor: anchor.clone(),
                            detail: format!(
                                "{q:?}: {} gives at least {a} but {} gives at most {b}",
                                lo.source, hi.source
                            ),
                        });
                    }
                }
            }
        }
        let (zeta_lo, _) = self.interval(Quantity::Zeta);
        let (_, beta_hi) = self.interval(Quantity::Beta);
        if let (Some(z), Some(b)) = (zeta_lo, beta_hi) {
            if z > b {
                return Err(Error::BoundContradiction {
                    anchor: "zeta_at_most_beta".into(),
                    detail: format!("zeta is at least {z} but beta is at most {b}"),
                });
            }
        }
        Ok(())
    }
}

/// What [`report`] may compute beyond the formulas.
#[derive(Debug, Clone)]
pub struct ReportOptions {
    /// Run the exact solvers on graphs small enough for them.
    pub compute: bool,
    pub budget: Budget,
    /// Gadget for the Kneser cover entries (k ≥ 3).
    pub gadget: Option<Hypergraph>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            compute: true,
            budget: Budget::UNLIMITED,
            gadget: None,
        }
    }
}

/// Largest order on which the report runs the exact metric-dimension search.
pub const REPORT_EXACT_BETA_MAX_ORDER: usize = 32;

/// Largest K(k, n) on which the report builds a cover and verifies it.
const REPORT_COVER_MAX_VERTICES: u128 = 250_000;

/// Collects every applicable entry for `target`, adds solver results where
/// they are cheap enough, and cross-checks the lot.
pub fn report(target: &Target, opts: &ReportOptions) -> Result<BoundsReport> {
    let mut entries = Vec::new();
    let mut graph: Option<(Graph, Option<Symmetry>)> = None;
    match *target {
        Target::Kneser { k, n } => {
            if k == 0 || k >= n {
                return Err(Error::invalid(format!("K({k},{n}) needs 1 <= k < n")));
            }
            entries.push(kneser_beta_lower(k, n));
            entries.push(kneser_zeta_lower(k, n));
            let gadget = match (k, &opts.gadget) {
                (2, _) => Some(Hypergraph::from_graph(&cycle_graph(5)?)),
                (_, Some(h)) if h.uniformity() == Some(k) => Some(h.clone()),
                _ => None,
            };
            if k >= 3 {
                entries.push(kneser_beta_upper(k, n, gadget.as_ref().map(|h| h.n)));
            }
            if let Some(h) = gadget {
                entries.extend(cover_entry(k, n, &h)?);
            }
            if binomial(n, k) <= REPORT_EXACT_BETA_MAX_ORDER as u128 {
                let g = kneser_graph(k, n)?;
                let sym = (n <= KNESER_SYMMETRY_MAX_N)
                    .then(|| Symmetry::kneser(&g, k, n))
                    .transpose()?;
                graph = Some((g, sym));
            }
        }
        Target::Moore { k } => {
            entries.extend(moore_bounds(k)?);
            graph = match k {
                2 => {
                    let g = cycle_graph(5)?;
                    let sym = Symmetry::cycle(&g)?;
                    Some((g, Some(sym)))
                }
                3 => {
                    let g = petersen();
                    let sym = Symmetry::kneser(&g, 2, 5)?;
                    Some((g, Some(sym)))
                }
                7 => Some((hoffman_singleton(), None)),
                _ => None,
            };
        }
        Target::Polarity { q } => {
            entries.extend(polarity_bounds(q)?);
            if let Ok(pg) = er_polarity_graph(q) {
                graph = Some((pg.graph, None));
            }
        }
        Target::Graph { .. } => {
            return Err(Error::invalid(
                "use report_for_graph for an arbitrary graph",
            ));
        }
    }
    if opts.compute {
        if let Some((g, sym)) = &graph {
            entries.extend(solver_entries(g, sym.clone(), &opts.budget));
        }
    }
    let rep = BoundsReport {
        target: target.clone(),
        entries,
    };
    rep.cross_check()?;
    Ok(rep)
}

/// Generic entries for any graph: the distance-counting lower bound, the
/// greedy upper bound, and solver results when small enough.
pub fn report_for_graph(g: &Graph, opts: &ReportOptions) -> Result<BoundsReport> {
    let mut entries = vec![
        BoundEntry::integer(
            Quantity::Beta,
            Kind::Lower,
            counting_lower_bound(g) as i64,
            "distance_counting",
        ),
        BoundEntry::integer(
            Quantity::Beta,
            Kind::Upper,
            greedy_resolving(g).len() as i64,
            "greedy_resolving",
        ),
    ];
    if let Some(k) = is_moore_diam2(g) {
        if matches!(k, 2 | 3 | 7 | 57) {
            entries.extend(moore_bounds(k)?);
        }
    }
    if opts.compute {
        entries.extend(solver_entries(g, None, &opts.budget));
    }
    let rep = BoundsReport {
        target: Target::Graph {
            order: g.order(),
            hash: g.hash().to_string(),
        },
        entries,
    };
    rep.cross_check()?;
    Ok(rep)
}

fn cover_entry(k: usize, n: usize, gadget: &Hypergraph) -> Result<Option<BoundEntry>> {
    if gadget.n > n || n < 3 * k || binomial(n, k) > REPORT_COVER_MAX_VERTICES {
        return Ok(None);
    }
    let cover = kneser_resolving_cover(k, n, gadget)?;
    let labels: Vec<KneserLabel> = cover
        .hypergraph
        .edges
        .iter()
        .map(|e| KneserLabel::new(e.clone(), n))
        .collect::<Result<_>>()?;
    let check = kneser_is_resolving(k, n, &labels)?;
    let mut e = BoundEntry::integer(
        Quantity::Beta,
        Kind::Upper,
        cover.landmarks.len() as i64,
        "cover_construction",
    );
    e.preconditions
        .push(pre("cover verified as a resolving set", check.verified));
    e.satisfied = check.verified;
    if k == 2 {
        e = e.flag("k = 2 cover with the 5-cycle gadget: computed, outside the stated formula");
    }
    Ok(Some(e))
}

fn solver_entries(g: &Graph, sym: Option<Symmetry>, budget: &Budget) -> Vec<BoundEntry> {
    let mut out = Vec::new();
    if g.order() <= REPORT_EXACT_BETA_MAX_ORDER {
        let md = metric_dimension(g, budget);
        match md.value {
            Some(v) => out.push(BoundEntry::integer(
                Quantity::Beta,
                Kind::Exact,
                v as i64,
                "exact_metric_dimension",
            )),
            None => {
                out.push(BoundEntry::integer(
                    Quantity::Beta,
                    Kind::Lower,
                    md.lower as i64,
                    "exact_metric_dimension",
                ));
                out.push(BoundEntry::integer(
                    Quantity::Beta,
                    Kind::Upper,
                    md.upper as i64,
                    "exact_metric_dimension",
                ));
            }
        }
    }
    let mut opts = LocOptions::default().with_budget(*budget);
    opts.symmetry = sym;
    if let Ok(ln) = localization_number(g, &opts) {
        match ln.value {
            Some(v) => out.push(BoundEntry::integer(
                Quantity::Zeta,
                Kind::Exact,
                v as i64,
                "exact_localization",
            )),
            None if ln.note.starts_with("open") => {
                out.push(BoundEntry::integer(
                    Quantity::Zeta,
                    Kind::Lower,
                    ln.lower as i64,
                    "exact_localization",
                ));
            }
            None => {}
        }
    }
    out
}
