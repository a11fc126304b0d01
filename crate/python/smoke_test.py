"""Smoke test for the islide extension module.

Build first: pip install --no-build-isolation ./crates/python
"""

import islide


def main():
    g = islide.Graph.theta(1, 4, 5)
    assert g.order() == 9 and len(g.edges()) == 10

    gbar, trace = islide.theta_seed(1, 4, 5)
    seed = gbar.complement()
    ig = islide.i_graph(seed)
    assert ig.order() == 9
    assert ig.skeleton().is_isomorphic(g)
    v = islide.verify_theta_seed(1, 4, 5)
    assert v["passed"] and v["i_set_count"] == 9, v
    print("theta(1,4,5):", trace["construction_id"], ig)

    try:
        islide.theta_seed(2, 2, 3)
    except islide.NotRealizableError as e:
        print("theta(2,2,3):", e)
    else:
        raise AssertionError("kappa should not be realizable")

    c6 = islide.Graph.named("cycle", 6)
    s = islide.seed_from_line_graph(c6)
    assert islide.i_graph(s).skeleton().is_isomorphic(c6)

    wheel = islide.Graph.named("wheel", 5).complement()
    report = islide.independence_report(wheel)
    assert report["i"] == report["alpha"] == 3, report

    c4 = islide.Graph.named("cycle", 4)
    found = islide.find_seed(c4, 5)
    w = islide.Graph.from_graph6(found["witnesses"][0])
    assert islide.i_graph(w).skeleton().is_isomorphic(c4)
    print("C4 seed:", w.edges())

    none = islide.confirm_non_realizable(islide.Graph.named("diamond"), 6)
    assert none["witnesses"] == []

    table = islide.verify_table(10)
    assert table["passed"]
    print("table up to 10:", len(table["rows"]), "specs")
    print("ok")


if __name__ == "__main__":
    main()
