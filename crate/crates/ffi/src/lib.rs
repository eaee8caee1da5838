//! C ABI for `locdim`.
//!
//! Graphs are opaque handles created by the `locdim_graph_*` constructors and
//! released with [`locdim_graph_free`]. Every fallible function returns a
//! [`LocdimStatus`]; on failure the message is available from
//! [`locdim_last_error`] on the same thread. Strings returned through `char**`
//! out-parameters are owned by the caller and freed with
//! [`locdim_string_free`]. A `max_nodes` of 0 means no limit.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use locdim::bounds::{report, report_for_graph, ReportOptions, Target};
use locdim::game::{
    loc_decide, localization_number, verify_strategy, LocDecision, LocOptions, MooreStrategy,
    StrategyReport,
};
use locdim::geometry::er_polarity_graph;
use locdim::graph::io::{from_json, to_json};
use locdim::graph::symmetry::Symmetry;
use locdim::graph::{cycle_graph, hoffman_singleton, kneser_graph, petersen};
use locdim::metric::{is_resolving, metric_dimension};
use locdim::{Budget, Error, Graph};

/// Return code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocdimStatus {
    Ok = 0,
    /// A check ran and came out negative (e.g. a strategy was evaded).
    VerificationFailed = 1,
    BudgetExhausted = 2,
    InvalidInput = 3,
    NullPointer = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

/// Outcome of [`locdim_loc_decide`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocdimDecision {
    CopWin = 0,
    RobberWin = 1,
    Unknown = 2,
}

/// Opaque graph handle.
pub struct LocdimGraph {
    graph: Graph,
    symmetry: Option<Symmetry>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LocdimStatus {
    match e {
        Error::BudgetExhausted(_) => LocdimStatus::BudgetExhausted,
        Error::BoundContradiction { .. } => LocdimStatus::VerificationFailed,
        _ => LocdimStatus::InvalidInput,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<LocdimStatus, (LocdimStatus, String)>) -> LocdimStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal error: {msg}"));
            LocdimStatus::Internal
        }
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, (LocdimStatus, String)>;
}

impl<T> OrStatus<T> for locdim::Result<T> {
    fn or_status(self) -> Result<T, (LocdimStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null(what: &str) -> (LocdimStatus, String) {
    (LocdimStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const LocdimGraph) -> Result<&'a LocdimGraph, (LocdimStatus, String)> {
    g.as_ref().ok_or_else(|| null("graph"))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (LocdimStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn emit_graph(
    out: *mut *mut LocdimGraph,
    make: impl FnOnce() -> locdim::Result<LocdimGraph>,
) -> LocdimStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = make().or_status()?;
        out.write(Box::into_raw(Box::new(g)));
        Ok(LocdimStatus::Ok)
    })
}

unsafe fn emit_string(
    out: *mut *mut c_char,
    s: String,
) -> Result<LocdimStatus, (LocdimStatus, String)> {
    let c = CString::new(s).map_err(|e| (LocdimStatus::Internal, e.to_string()))?;
    write(out, c.into_raw(), "out")?;
    Ok(LocdimStatus::Ok)
}

fn budget(max_nodes: u64) -> Budget {
    if max_nodes == 0 {
        Budget::UNLIMITED
    } else {
        Budget::nodes(max_nodes)
    }
}

fn plain(graph: Graph) -> LocdimGraph {
    LocdimGraph {
        graph,
        symmetry: None,
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn locdim_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn locdim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_cycle(n: usize, out: *mut *mut LocdimGraph) -> LocdimStatus {
    emit_graph(out, || {
        let graph = cycle_graph(n)?;
        let symmetry = Some(Symmetry::cycle(&graph)?);
        Ok(LocdimGraph { graph, symmetry })
    })
}

/// Kneser graph K(k, n); automorphisms are attached for n ≤ 8.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_kneser(
    k: usize,
    n: usize,
    out: *mut *mut LocdimGraph,
) -> LocdimStatus {
    emit_graph(out, || {
        let graph = kneser_graph(k, n)?;
        let symmetry = if n <= 8 {
            Some(Symmetry::kneser(&graph, k, n)?)
        } else {
            None
        };
        Ok(LocdimGraph { graph, symmetry })
    })
}

/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_petersen(out: *mut *mut LocdimGraph) -> LocdimStatus {
    emit_graph(out, || {
        let graph = petersen();
        let symmetry = Some(Symmetry::kneser(&graph, 2, 5)?);
        Ok(LocdimGraph { graph, symmetry })
    })
}

/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_hoffman_singleton(
    out: *mut *mut LocdimGraph,
) -> LocdimStatus {
    emit_graph(out, || Ok(plain(hoffman_singleton())))
}

/// Orthogonal polarity graph ER(q).
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_polarity(q: u32, out: *mut *mut LocdimGraph) -> LocdimStatus {
    emit_graph(out, || Ok(plain(er_polarity_graph(q)?.graph)))
}

/// Parses the graph JSON format.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_from_json(
    json: *const c_char,
    out: *mut *mut LocdimGraph,
) -> LocdimStatus {
    if json.is_null() {
        set_error("json is null".into());
        return LocdimStatus::NullPointer;
    }
    let text = CStr::from_ptr(json).to_string_lossy().into_owned();
    emit_graph(out, || Ok(plain(from_json(&text)?)))
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from a constructor here and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_free(g: *mut LocdimGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_order(g: *const LocdimGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.order())
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_to_json(
    g: *const LocdimGraph,
    out: *mut *mut c_char,
) -> LocdimStatus {
    guard(|| emit_string(out, to_json(&graph_ref(g)?.graph)))
}

/// The graph's content hash as hex.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_graph_hash(
    g: *const LocdimGraph,
    out: *mut *mut c_char,
) -> LocdimStatus {
    guard(|| emit_string(out, graph_ref(g)?.graph.hash().to_string()))
}

/// Whether `set[0..len]` resolves the graph.
///
/// # Safety
/// `g` must be a live handle, `set` valid for `len` reads (may be null when
/// `len` is 0), `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn locdim_is_resolving(
    g: *const LocdimGraph,
    set: *const usize,
    len: usize,
    out: *mut bool,
) -> LocdimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let s = if len == 0 {
            &[][..]
        } else if set.is_null() {
            return Err(null("set"));
        } else {
            std::slice::from_raw_parts(set, len)
        };
        let cert = is_resolving(&g.graph, s).or_status()?;
        write(out, cert.verified, "out")?;
        Ok(LocdimStatus::Ok)
    })
}

/// Exact metric dimension. On budget exhaustion `*lower` and `*upper` still
/// hold the interval found and the status is `BudgetExhausted`.
///
/// # Safety
/// `g` must be a live handle; `lower` and `upper` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn locdim_metric_dimension(
    g: *const LocdimGraph,
    max_nodes: u64,
    lower: *mut usize,
    upper: *mut usize,
) -> LocdimStatus {
    guard(|| {
        let md = metric_dimension(&graph_ref(g)?.graph, &budget(max_nodes));
        write(lower, md.lower, "lower")?;
        write(upper, md.upper, "upper")?;
        if md.budget_exhausted {
            return Err((
                LocdimStatus::BudgetExhausted,
                "metric dimension search ran out of budget".into(),
            ));
        }
        Ok(LocdimStatus::Ok)
    })
}

/// Decides whether `k` cops win the localization game. `*rounds` receives
/// the worst-case capture time on a cop win and 0 otherwise.
///
/// # Safety
/// `g` must be a live handle; `out` and `rounds` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn locdim_loc_decide(
    g: *const LocdimGraph,
    k: usize,
    max_nodes: u64,
    out: *mut LocdimDecision,
    rounds: *mut u32,
) -> LocdimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let opts = LocOptions {
            budget: budget(max_nodes),
            symmetry: g.symmetry.clone(),
            ..LocOptions::default()
        };
        let (d, r) = match loc_decide(&g.graph, k, &opts).or_status()? {
            LocDecision::CopWin { strategy } => (LocdimDecision::CopWin, strategy.rounds),
            LocDecision::RobberWin => (LocdimDecision::RobberWin, 0),
            LocDecision::Unknown { .. } => (LocdimDecision::Unknown, 0),
        };
        write(out, d, "out")?;
        write(rounds, r, "rounds")?;
        Ok(LocdimStatus::Ok)
    })
}

/// Localization number as an interval; `lower == upper` when decided.
///
/// # Safety
/// `g` must be a live handle; `lower` and `upper` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn locdim_localization_number(
    g: *const LocdimGraph,
    max_nodes: u64,
    lower: *mut usize,
    upper: *mut usize,
) -> LocdimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let opts = LocOptions {
            budget: budget(max_nodes),
            symmetry: g.symmetry.clone(),
            ..LocOptions::default()
        };
        let z = localization_number(&g.graph, &opts).or_status()?;
        write(lower, z.lower, "lower")?;
        write(upper, z.upper, "upper")?;
        Ok(LocdimStatus::Ok)
    })
}

/// Plays the staged Moore-graph strategy against every robber choice.
/// Returns `VerificationFailed` if any play escapes; `*rounds` receives the
/// worst-case capture time on success.
///
/// # Safety
/// `g` must be a live handle; `rounds` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn locdim_verify_moore_strategy(
    g: *const LocdimGraph,
    max_rounds: u32,
    rounds: *mut u32,
) -> LocdimStatus {
    guard(|| {
        let g = &graph_ref(g)?.graph;
        let s = MooreStrategy::new(g).or_status()?;
        match verify_strategy(g, &s, s.cops(), max_rounds) {
            StrategyReport::Captured { rounds: r, .. } => {
                write(rounds, r, "rounds")?;
                Ok(LocdimStatus::Ok)
            }
            StrategyReport::Evaded { reason, .. } => Err((
                LocdimStatus::VerificationFailed,
                format!("robber escapes: {reason:?}"),
            )),
        }
    })
}

/// Bounds report for K(k, n) as JSON, formulas only.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_bounds_kneser_json(
    k: usize,
    n: usize,
    out: *mut *mut c_char,
) -> LocdimStatus {
    guard(|| {
        let opts = ReportOptions {
            compute: false,
            ..ReportOptions::default()
        };
        let rep = report(&Target::Kneser { k, n }, &opts).or_status()?;
        emit_string(
            out,
            serde_json::to_string(&rep).map_err(|e| (LocdimStatus::Internal, e.to_string()))?,
        )
    })
}

/// Bounds report for a graph as JSON, with solver values where cheap.
///
/// # Safety
/// `g` must be a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn locdim_bounds_graph_json(
    g: *const LocdimGraph,
    max_nodes: u64,
    out: *mut *mut c_char,
) -> LocdimStatus {
    guard(|| {
        let opts = ReportOptions {
            budget: budget(max_nodes),
            ..ReportOptions::default()
        };
        let rep = report_for_graph(&graph_ref(g)?.graph, &opts).or_status()?;
        emit_string(
            out,
            serde_json::to_string(&rep).map_err(|e| (LocdimStatus::Internal, e.to_string()))?,
        )
    })
}
