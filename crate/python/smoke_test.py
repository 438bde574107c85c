"""Smoke test for the polyjoin extension module.

Build first:  maturin develop --release -m crates/python/Cargo.toml
"""
import json

import polyjoin as pj


def main():
    # graphs and complexes
    g = pj.Graph("lex(P5,K2)")
    assert g.order == 10, g
    k = g.forest_complex(0)
    assert k.reduced_betti() == {1: 8, 2: 1}, k.reduced_betti()
    assert k.torsion() == {}
    assert pj.Complex.from_text(k.to_text()) == k

    p5 = pj.Graph("P5").lex(pj.Graph("K2"))
    assert p5.edges() == g.edges()

    # suspension of F_0(P5) ~ S^1
    s0 = pj.Complex(2, [[0], [1]])
    f0 = pj.Graph("P5").forest_complex(0)
    assert f0.reduced_betti() == {1: 1}
    assert s0.join(f0).reduced_betti() == {2: 1}

    # boundary of a simplex and an infinite degree bound
    assert pj.Complex.simplex(4).skeleton(2).reduced_betti() == {2: 1}
    assert pj.Graph("C5").forest_complex("inf").reduced_betti() == {3: 1}

    # polyhedral join of S^0 over a 2-simplex: S^0 * S^0 * S^0 = S^2
    assert pj.polyhedral_join_uniform(pj.Complex.simplex(3), s0).reduced_betti() == {2: 1}

    # formulas
    assert pj.f_closed(2, 3, 4) == pj.f_recur(2, 3, 4)
    a, b, c = pj.abc_polynomials(1)
    assert isinstance(a, dict)

    # verification
    report = json.loads(pj.verify_case(json.dumps({"theorem": "k2-join", "g": "P6", "d": 1})))
    assert report["verdict"] == "PASS" and report["computed"] == {"1": 35}, report

    code, reports = pj.run_sweep(json.dumps({"cases": [
        {"theorem": "pn-lex", "n": 4, "h": "K2"},
        {"theorem": "bipartite", "n": 2, "m": 2, "r": 2, "d": "inf"},
    ]}))
    verdicts = [r["verdict"] for r in json.loads(reports)]
    assert (code, verdicts) == (1, ["PASS", "FAIL"]), (code, verdicts)

    try:
        pj.Graph("Q7")
    except ValueError:
        pass
    else:
        raise AssertionError("bad graph expression accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
