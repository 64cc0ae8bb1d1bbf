"""Smoke test for the waypoint_routing extension module."""

import json

import waypoint_routing as wr

GREEDY_TRAP = """
graph undirected
edge s u
edge u w
edge u t
edge v3 v2
edge v2 v1
edge v1 w
edge v3 s
edge s v4
edge v4 t
route s t
waypoints w
"""

DOUBLE_BACK = "graph undirected\nedge s w\nedge s w\nedge s t\nroute s t\nwaypoints w\n"


def main():
    inst = wr.Instance.parse(GREEDY_TRAP)
    assert inst.k == 1 and inst.route == ["s", "w", "t"]
    for algo in ["suurballe", "flow", "twdp", "oracle"]:
        sol = wr.solve(inst, algo=algo)
        assert sol.feasible and sol.cost == "6", (algo, sol)
    greedy = wr.solve(inst, algo="greedy")
    assert greedy.cost == "8" and greedy.warnings[0][0] == "heuristic"

    back = wr.Instance.parse(DOUBLE_BACK)
    sol = wr.solve(back)
    assert sol.walk == ["s", "w", "s", "t"] and sol.cost == "3"
    assert wr.verify(back, sol.to_json()) == []
    doc = json.loads(sol.to_json())
    doc["cost"]["exact"] = "2"
    assert wr.verify(back, json.dumps(doc)) != []

    assert wr.classify(back)["tag"]

    gadget = wr.partition_gadget([1, 2, 3], "arbitrary")
    res = wr.solve(gadget)
    assert res.feasible and any(tag == "demand-change" for tag, _ in res.warnings)
    assert not wr.solve(wr.partition_gadget([1, 2, 4])).feasible

    rnd = wr.random_instance(7, nodes=9, waypoints=2)
    assert wr.Instance.parse(rnd.to_text()).to_text() == rnd.to_text()
    assert wr.solve(rnd, algo="oracle", oracle_budget=1).status == "budget_exceeded"

    try:
        wr.solve(inst, algo="nonsense")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown algorithm accepted")
    print("python smoke test passed")


if __name__ == "__main__":
    main()
