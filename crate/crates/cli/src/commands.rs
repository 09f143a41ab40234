use std::fs;
use std::path::Path;
use std::time::Instant;

use sha2::{Digest, Sha256};
use twcount::ccdp::{self, Limits};
use twcount::gadget::{ord_gadget_variant, OrdVariant};
use twcount::io::{self, GraphFile};
use twcount::nice::make_nice;
use twcount::{
    algebra, counting, heuristic_tree_decomposition, oracle, validate_tree_decomposition, DirectedMultigraph,
    Error, SquareIntMatrix, TreeDecomposition, UnderlyingGraph, UndirectedMultigraph,
};

use crate::args::{Command, Common, Task, Variant};
use crate::report::{Failure, RunReport, Status, Value, Verification};

/// Digest of every input file, in the order they are read.
struct Inputs(Sha256);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        self.0.update(text.as_bytes());
        Ok(text)
    }

    fn matrix(&mut self, path: &Path) -> Result<SquareIntMatrix, Failure> {
        let text = self.read(path)?;
        io::parse_matrix(&text).map_err(|e| parse_failure(path, e))
    }

    fn graph(&mut self, path: &Path) -> Result<GraphFile, Failure> {
        let text = self.read(path)?;
        io::parse_graph(&text).map_err(|e| parse_failure(path, e))
    }

    fn undirected(&mut self, path: &Path) -> Result<UndirectedMultigraph, Failure> {
        match self.graph(path)? {
            GraphFile::Undirected(g) => Ok(g),
            GraphFile::Directed(_) => Err(Failure::Usage(format!(
                "{}: expected an undirected graph (p tw header)",
                path.display()
            ))),
        }
    }

    fn directed(&mut self, path: &Path) -> Result<DirectedMultigraph, Failure> {
        match self.graph(path)? {
            GraphFile::Directed(d) => Ok(d),
            GraphFile::Undirected(_) => Err(Failure::Usage(format!(
                "{}: expected a directed graph (p dgr header)",
                path.display()
            ))),
        }
    }

    /// The decomposition in `path`, or the min-fill heuristic for `g`.
    fn decomposition<G: UnderlyingGraph + ?Sized>(
        &mut self,
        path: Option<&Path>,
        g: &G,
    ) -> Result<TreeDecomposition, Failure> {
        let Some(path) = path else {
            return Ok(heuristic_tree_decomposition(g));
        };
        let text = self.read(path)?;
        let (td, n) = io::parse_tree_decomposition(&text).map_err(|e| parse_failure(path, e))?;
        if n != g.vertex_count() {
            return Err(Error::InvalidDecomposition(format!(
                "decomposition is for {n} vertices, input has {}",
                g.vertex_count()
            ))
            .into());
        }
        Ok(td)
    }

    fn hex(self) -> String {
        hex::encode(self.0.finalize())
    }
}

fn parse_failure(path: &Path, e: io::ParseError) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn limits(common: &Common) -> Limits {
    match common.max_width {
        Some(w) => Limits::with_max_width(w),
        None => Limits::default(),
    }
}

fn check(oracle: &'static str, cap: String, engine: &Value, oracle_result: Value) -> Verification {
    let status = if *engine == oracle_result {
        Status::Match
    } else {
        Status::Mismatch
    };
    Verification {
        oracle,
        cap,
        status,
        oracle_result,
    }
}

fn cap(what: &str, limit: usize) -> String {
    format!("cap {what} <= {limit}")
}

fn write_out(path: &Path, text: &str) -> Result<Value, Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(Value::Text(format!("{}\n", path.display())))
}

/// Runs one subcommand, with an oracle check under `verify` or `--verify`.
pub fn run(command: &Command) -> Result<RunReport, Failure> {
    let (command, verify) = command.task();
    let common = command.common();
    let limits = limits(common);
    let start = Instant::now();
    let mut inputs = Inputs(Sha256::new());

    let (width, result, verification) = match command {
        Task::Decomp { graph, out, .. } => {
            let g = inputs.graph(graph)?;
            let td = heuristic_tree_decomposition(g.underlying());
            let text = io::write_tree_decomposition(&td, g.vertex_count());
            let verification = verify.then(|| {
                let checked = validate_tree_decomposition(g.underlying(), &td).ok();
                check(
                    "validate_tree_decomposition",
                    "no cap".into(),
                    &Value::Integer(td.width().into()),
                    Value::Integer(checked.map_or((-1).into(), Into::into)),
                )
            });
            let result = match out {
                Some(path) => write_out(path, &text)?,
                None => Value::Text(text),
            };
            (td.width(), result, verification)
        }
        Task::Validate { graph, td, .. } => {
            if verify {
                return Err(Failure::Usage("validate has no oracle to check against".into()));
            }
            let g = inputs.graph(graph)?;
            let t = inputs.decomposition(Some(td), g.underlying())?;
            let width = validate_tree_decomposition(g.underlying(), &t)?;
            (width, Value::Integer(width.into()), None)
        }
        Task::Det { input, .. } => {
            let m = inputs.matrix(&input.matrix)?;
            let t = inputs.decomposition(input.td.as_deref(), &m)?;
            let nt = make_nice(&m, &t)?;
            let result = Value::Integer(ccdp::determinant(&m, &nt, limits)?);
            let verification = if verify {
                Some(if m.n() <= oracle::MAX_PERMUTATION_DIM {
                    check(
                        "det_permutation_expansion",
                        cap("n", oracle::MAX_PERMUTATION_DIM),
                        &result,
                        Value::Integer(oracle::det_permutation_expansion(&m)?),
                    )
                } else {
                    check("det_fraction_free", "no cap".into(), &result, Value::Integer(oracle::det_fraction_free(&m)))
                })
            } else {
                None
            };
            (nt.width(), result, verification)
        }
        Task::Charpoly { input, .. } => {
            let m = inputs.matrix(&input.matrix)?;
            let t = inputs.decomposition(input.td.as_deref(), &m)?;
            let nt = make_nice(&m, &t)?;
            let result = Value::Polynomial(ccdp::characteristic_polynomial(&m, &nt, limits)?);
            let verification = verify.then(|| {
                check(
                    "charpoly_interpolation",
                    "no cap".into(),
                    &result,
                    Value::Polynomial(oracle::charpoly_interpolation(&m)),
                )
            });
            (nt.width(), result, verification)
        }
        Task::Trace { input, k, .. } => {
            let m = inputs.matrix(&input.matrix)?;
            let t = inputs.decomposition(input.td.as_deref(), &m)?;
            let nt = make_nice(&m, &t)?;
            let result = Value::Integer(algebra::trace_power(&m, &nt, *k, limits)?);
            let verification = verify.then(|| {
                check(
                    "matrix_power_trace",
                    "no cap".into(),
                    &result,
                    Value::Integer(oracle::matrix_power_trace(&m, *k)),
                )
            });
            (nt.width(), result, verification)
        }
        Task::Histogram { graph, matrix, td, .. } => match (graph, matrix) {
            (Some(path), _) => {
                let d = match inputs.graph(path)? {
                    GraphFile::Directed(d) => d,
                    GraphFile::Undirected(g) => g.bidirected(),
                };
                let t = inputs.decomposition(td.as_deref(), &d)?;
                let nt = make_nice(&d, &t)?;
                let h = ccdp::cycle_cover_histogram(&d, &nt, limits)?;
                let result = Value::Histogram(h.counts().clone());
                let verification = if verify {
                    let brute = oracle::enumerate_cycle_covers(&d)?;
                    Some(check(
                        "enumerate_cycle_covers",
                        cap("vertices", oracle::MAX_CYCLE_COVER_VERTICES),
                        &result,
                        Value::Histogram(brute.counts().clone()),
                    ))
                } else {
                    None
                };
                (nt.width(), result, verification)
            }
            (None, Some(path)) => {
                let m = inputs.matrix(path)?;
                let t = inputs.decomposition(td.as_deref(), &m)?;
                let nt = make_nice(&m, &t)?;
                let h = ccdp::weighted_cycle_cover_histogram(&m, &nt, limits)?;
                // Weighted covers have no enumeration oracle; their signed sum must be the determinant.
                let verification = verify.then(|| {
                    check(
                        "det_fraction_free (signed histogram sum)",
                        "no cap".into(),
                        &Value::Integer(h.signed_sum()),
                        Value::Integer(oracle::det_fraction_free(&m)),
                    )
                });
                (nt.width(), Value::Histogram(h.counts().clone()), verification)
            }
            (None, None) => return Err(Failure::Usage("histogram needs --graph or --matrix".into())),
        },
        Task::Spanning { input, .. } => {
            let g = inputs.undirected(&input.graph)?;
            let t = inputs.decomposition(input.td.as_deref(), &g)?;
            let result = Value::Integer(counting::count_spanning_trees(&g, &t, limits)?);
            let verification = if verify {
                Some(check(
                    "enumerate_spanning_trees",
                    cap("edges", oracle::MAX_SPANNING_TREE_EDGES),
                    &result,
                    Value::Integer(oracle::enumerate_spanning_trees(&g)?),
                ))
            } else {
                None
            };
            (t.width(), result, verification)
        }
        Task::Arborescences { input, root, .. } => {
            let Some(root) = root.checked_sub(1) else {
                return Err(Failure::Usage("--root is 1-based".into()));
            };
            let d = inputs.directed(&input.graph)?;
            let t = inputs.decomposition(input.td.as_deref(), &d)?;
            let result = Value::Integer(counting::count_arborescences(&d, root, &t, limits)?);
            let verification = if verify {
                Some(check(
                    "enumerate_arborescences",
                    cap("candidate arcs", oracle::MAX_ARBORESCENCE_ARCS),
                    &result,
                    Value::Integer(oracle::enumerate_arborescences(&d, root)?),
                ))
            } else {
                None
            };
            (t.width(), result, verification)
        }
        Task::EulerDir { graph, .. } => {
            let d = inputs.directed(graph)?;
            let result = Value::Integer(counting::count_directed_euler_tours(&d, limits)?);
            let verification = if verify {
                Some(check(
                    "enumerate_directed_euler_tours",
                    cap("arcs", oracle::MAX_EULER_TOUR_EDGES),
                    &result,
                    Value::Integer(oracle::enumerate_directed_euler_tours(&d)?),
                ))
            } else {
                None
            };
            (heuristic_tree_decomposition(&d).width(), result, verification)
        }
        Task::EulerUndir { graph, max_edges, .. } => {
            let g = inputs.undirected(graph)?;
            let limits = Limits {
                max_orientation_edges: max_edges.unwrap_or(limits.max_orientation_edges),
                ..limits
            };
            let result = Value::Integer(counting::count_undirected_euler_tours(&g, limits)?);
            let verification = if verify {
                Some(check(
                    "enumerate_undirected_euler_tours",
                    cap("edges", oracle::MAX_EULER_TOUR_EDGES),
                    &result,
                    Value::Integer(oracle::enumerate_undirected_euler_tours(&g)?),
                ))
            } else {
                None
            };
            (heuristic_tree_decomposition(&g).width(), result, verification)
        }
        Task::GadgetOrd { n, s, t, variant, out, .. } => {
            let (Some(s0), Some(t0)) = (s.checked_sub(1), t.checked_sub(1)) else {
                return Err(Failure::Usage("--s and --t are 1-based".into()));
            };
            inputs.0.update(format!("gadget-ord {n} {s} {t} {variant:?}").as_bytes());
            let variant = match variant {
                Variant::Literal => OrdVariant::Literal,
                Variant::Reconciled => OrdVariant::Reconciled,
            };
            let g = ord_gadget_variant(*n, s0, t0, variant)?;
            let verification = verify.then(|| {
                // Singular exactly when s comes before t on the path.
                let det = oracle::det_fraction_free(&g.adjacency_matrix());
                let holds = if s < t { det == 0.into() } else { det.magnitude() == &1u32.into() };
                Verification {
                    oracle: "det_fraction_free (zero iff s < t)",
                    cap: "no cap".into(),
                    status: if holds { Status::Match } else { Status::Mismatch },
                    oracle_result: Value::Integer(det),
                }
            });
            let text = io::write_directed(&g);
            let result = match out {
                Some(path) => write_out(path, &text)?,
                None => Value::Text(text),
            };
            (heuristic_tree_decomposition(&g).width(), result, verification)
        }
    };

    Ok(RunReport {
        command: command.name(),
        input_sha256: inputs.hex(),
        width,
        result,
        verify: verification,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
