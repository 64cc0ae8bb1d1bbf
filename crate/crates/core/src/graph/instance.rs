use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::network::{Network, NodeId};
use crate::rational::Rational;

/// A waypoint routing problem: route from `source` through `waypoints` in
/// order to `target`, with per-segment demands and optional length bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaypointInstance {
    pub network: Network,
    pub source: NodeId,
    pub target: NodeId,
    pub waypoints: Vec<NodeId>,
    pub demands: Vec<Rational>,
    pub bounds: Option<Vec<Rational>>,
}

impl WaypointInstance {
    /// Builds an instance with unit demands and no bounds, rejecting
    /// waypoints that coincide with the source or target.
    pub fn new(
        network: Network,
        source: NodeId,
        target: NodeId,
        waypoints: Vec<NodeId>,
    ) -> Result<Self> {
        InstanceBuilder::new(network, source, target)
            .waypoints(waypoints)
            .build()
    }

    pub fn builder(network: Network, source: NodeId, target: NodeId) -> InstanceBuilder {
        InstanceBuilder::new(network, source, target)
    }

    /// Number of waypoints `k`.
    pub fn k(&self) -> usize {
        self.waypoints.len()
    }

    pub fn segment_count(&self) -> usize {
        self.waypoints.len() + 1
    }

    /// The route `(s, w1, ..., wk, t)`.
    pub fn route(&self) -> Vec<NodeId> {
        let mut r = Vec::with_capacity(self.waypoints.len() + 2);
        r.push(self.source);
        r.extend_from_slice(&self.waypoints);
        r.push(self.target);
        r
    }

    pub fn has_unit_demands(&self) -> bool {
        self.demands.iter().all(|d| *d == 1)
    }

    pub fn has_demand_changes(&self) -> bool {
        self.demands.windows(2).any(|w| w[0] != w[1])
    }

    pub fn bound(&self, segment: usize) -> Option<Rational> {
        self.bounds.as_ref().map(|b| b[segment])
    }

    /// Same routing request over a different network whose node ids are
    /// compatible (used after transforms that only append nodes).
    pub fn with_network(&self, network: Network) -> WaypointInstance {
        WaypointInstance {
            network,
            ..self.clone()
        }
    }

    pub fn describe_route(&self) -> String {
        self.route()
            .iter()
            .map(|&v| self.network.name(v))
            .collect::<Vec<_>>()
            .join(" → ")
    }
}

#[derive(Clone, Debug)]
pub struct InstanceBuilder {
    network: Network,
    source: NodeId,
    target: NodeId,
    waypoints: Vec<NodeId>,
    demands: Option<Vec<Rational>>,
    bounds: Option<Vec<Rational>>,
    allow_degenerate: bool,
}

impl InstanceBuilder {
    pub fn new(network: Network, source: NodeId, target: NodeId) -> Self {
        InstanceBuilder {
            network,
            source,
            target,
            waypoints: Vec::new(),
            demands: None,
            bounds: None,
            allow_degenerate: false,
        }
    }

    pub fn waypoints(mut self, waypoints: Vec<NodeId>) -> Self {
        self.waypoints = waypoints;
        self
    }

    pub fn demands(mut self, demands: Vec<Rational>) -> Self {
        self.demands = Some(demands);
        self
    }

    pub fn bounds(mut self, bounds: Vec<Rational>) -> Self {
        self.bounds = Some(bounds);
        self
    }

    /// Permit a waypoint to coincide with the source or target, yielding a
    /// zero-length segment.
    pub fn allow_degenerate(mut self, allow: bool) -> Self {
        self.allow_degenerate = allow;
        self
    }

    pub fn build(self) -> Result<WaypointInstance> {
        let net = &self.network;
        if net.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = net.node_count();
        for &v in [self.source, self.target].iter().chain(&self.waypoints) {
            if v.0 >= n {
                return Err(Error::UnknownNode(format!("#{}", v.0)));
            }
        }
        let mut seen = HashSet::new();
        for &w in &self.waypoints {
            if !seen.insert(w) {
                return Err(Error::DuplicateWaypoint(net.name(w).to_string()));
            }
            if !self.allow_degenerate && (w == self.source || w == self.target) {
                return Err(Error::DegenerateWaypoint(net.name(w).to_string()));
            }
        }
        let segments = self.waypoints.len() + 1;
        let demands = match self.demands {
            Some(d) => {
                if d.len() != segments {
                    return Err(Error::LengthMismatch {
                        field: "demands",
                        expected: segments,
                        found: d.len(),
                    });
                }
                if let Some(bad) = d.iter().find(|x| !x.is_positive()) {
                    return Err(Error::InvalidField {
                        field: "demands",
                        message: format!("demand {bad} is not positive"),
                    });
                }
                d
            }
            None => vec![Rational::ONE; segments],
        };
        if let Some(b) = &self.bounds {
            if b.len() != segments {
                return Err(Error::LengthMismatch {
                    field: "bounds",
                    expected: segments,
                    found: b.len(),
                });
            }
            if let Some(bad) = b.iter().find(|x| x.is_negative()) {
                return Err(Error::InvalidField {
                    field: "bounds",
                    message: format!("bound {bad} is negative"),
                });
            }
        }
        Ok(WaypointInstance {
            network: self.network,
            source: self.source,
            target: self.target,
            waypoints: self.waypoints,
            demands,
            bounds: self.bounds,
        })
    }
}
