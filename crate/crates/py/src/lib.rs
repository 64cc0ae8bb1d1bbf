//! Python bindings for the waypoint routing solvers.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use waypoint_core::engine::{self, Algo, Outcome, SolveOptions};
use waypoint_core::gadgets::random::{random_connected, random_route, seeded, EdgeRanges};
use waypoint_core::gadgets::{gadget_partition, PartitionFlavor};
use waypoint_core::graph::{classify as classify_network, validate_walk, WaypointInstance};
use waypoint_core::io::{
    emit_result, parse_graphml_topology, parse_instance, parse_result, serialize_instance,
};
use waypoint_core::oracle::Limits;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A routing instance: network, route and per-segment demands.
#[pyclass(name = "Instance", module = "waypoint_routing", frozen)]
struct PyInstance {
    inner: WaypointInstance,
}

#[pymethods]
impl PyInstance {
    /// Parses the line-oriented instance format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_instance(text)
            .map(|inner| PyInstance { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(err)?;
        Self::parse(&text)
    }

    /// Undirected GraphML topology with the route given by node ids.
    #[staticmethod]
    #[pyo3(signature = (text, source, target, waypoints=Vec::new()))]
    fn from_graphml(
        text: &str,
        source: &str,
        target: &str,
        waypoints: Vec<String>,
    ) -> PyResult<Self> {
        let net = parse_graphml_topology(text).map_err(err)?;
        let s = net.require_node(source).map_err(err)?;
        let t = net.require_node(target).map_err(err)?;
        let w = waypoints
            .iter()
            .map(|x| net.require_node(x))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let inner = WaypointInstance::builder(net, s, t)
            .waypoints(w)
            .build()
            .map_err(err)?;
        Ok(PyInstance { inner })
    }

    fn to_text(&self) -> PyResult<String> {
        serialize_instance(&self.inner).map_err(err)
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn directed(&self) -> bool {
        self.inner.network.is_directed()
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.inner.network.node_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.network.edge_count()
    }

    /// Source, waypoints and target by name.
    #[getter]
    fn route(&self) -> Vec<String> {
        let net = &self.inner.network;
        self.inner
            .route()
            .into_iter()
            .map(|v| net.name(v).to_string())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance({} nodes, {} edges, route {})",
            self.node_count(),
            self.edge_count(),
            self.inner.describe_route()
        )
    }
}

/// Outcome of [`solve`].
#[pyclass(name = "Solution", module = "waypoint_routing", frozen)]
struct PySolution {
    #[pyo3(get)]
    status: String,
    #[pyo3(get)]
    solver: String,
    /// Exact cost as `p` or `p/q`.
    #[pyo3(get)]
    cost: Option<String>,
    #[pyo3(get)]
    walk: Vec<String>,
    /// `(tag, message)` pairs.
    #[pyo3(get)]
    warnings: Vec<(String, String)>,
    json: String,
}

#[pymethods]
impl PySolution {
    #[getter]
    fn feasible(&self) -> bool {
        self.status == "feasible"
    }

    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        match &self.cost {
            Some(c) => format!(
                "Solution({}, cost {c}, solver {})",
                self.status, self.solver
            ),
            None => format!("Solution({}, solver {})", self.status, self.solver),
        }
    }
}

/// Solves with the named algorithm (`auto`, `suurballe`, `flow`, `tree`,
/// `dag`, `twdp`, `oracle`, `greedy`).
#[pyfunction]
#[pyo3(signature = (instance, algo="auto", oracle_budget=None))]
fn solve(
    py: Python<'_>,
    instance: &PyInstance,
    algo: &str,
    oracle_budget: Option<u64>,
) -> PyResult<PySolution> {
    let mut opts = SolveOptions::default().with_algo(algo.parse::<Algo>().map_err(err)?);
    if let Some(b) = oracle_budget {
        opts.oracle = Limits::default().with_steps(b);
    }
    let inst = &instance.inner;
    let res = py.detach(|| engine::solve(inst, opts)).map_err(err)?;
    let walk = match &res.outcome {
        Outcome::Solved(s) => s.walk_names(&inst.network),
        _ => Vec::new(),
    };
    Ok(PySolution {
        status: res.outcome.status().to_string(),
        solver: res.solver.to_string(),
        cost: res.outcome.solution().map(|s| s.total_cost.to_string()),
        walk,
        warnings: res
            .warnings
            .iter()
            .map(|w| (w.tag.tag().to_string(), w.message.clone()))
            .collect(),
        json: emit_result(inst, &res),
    })
}

/// Checks a JSON result against the instance; returns the violations.
#[pyfunction]
fn verify(instance: &PyInstance, result_json: &str) -> PyResult<Vec<String>> {
    let doc = parse_result(result_json).map_err(err)?;
    let Some(walk) = doc.to_walk(&instance.inner).map_err(err)? else {
        return Ok(Vec::new());
    };
    Ok(validate_walk(&instance.inner, &walk)
        .map_err(err)?
        .messages())
}

/// Structural class of the instance's network.
#[pyfunction]
fn classify<'py>(py: Python<'py>, instance: &PyInstance) -> PyResult<Bound<'py, PyDict>> {
    let class = classify_network(&instance.inner.network).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item(
        "tag",
        serde_json::to_value(class.tag).map_err(err)?.as_str(),
    )?;
    out.set_item("treewidth_upper_bound", class.treewidth_upper_bound)?;
    Ok(out)
}

/// Partition gadget; `flavor` is `arbitrary` or `bounded`.
#[pyfunction]
#[pyo3(signature = (integers, flavor="arbitrary"))]
fn partition_gadget(integers: Vec<u64>, flavor: &str) -> PyResult<PyInstance> {
    let flavor = match flavor {
        "arbitrary" => PartitionFlavor::ArbitraryChange,
        "bounded" => PartitionFlavor::BoundedChange,
        other => return Err(err(format!("unknown flavor `{other}`"))),
    };
    let g = gadget_partition(&integers, flavor).map_err(err)?;
    Ok(PyInstance { inner: g.instance })
}

/// Seeded connected undirected instance.
#[pyfunction]
#[pyo3(signature = (seed, nodes=8, extra_edges=4, waypoints=1))]
fn random_instance(
    seed: u64,
    nodes: usize,
    extra_edges: usize,
    waypoints: usize,
) -> PyResult<PyInstance> {
    if nodes < waypoints + 2 {
        return Err(err("not enough nodes for the route"));
    }
    let mut rng = seeded(seed);
    let net = random_connected(&mut rng, nodes, extra_edges, EdgeRanges::default());
    Ok(PyInstance {
        inner: random_route(&mut rng, net, waypoints, &[1]),
    })
}

#[pymodule]
fn waypoint_routing(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(partition_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(random_instance, m)?)?;
    Ok(())
}
