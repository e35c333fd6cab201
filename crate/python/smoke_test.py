"""Smoke test for the mintrans Python extension.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import mintrans


def main():
    p = mintrans.Permutation("(1 2 3)", 4)
    q = mintrans.Permutation("(3 4)", 4)
    assert str(p) == "(1 2 3)" and p.order() == 3
    assert p.compose(q).apply(0) == q.apply(p.apply(0))
    assert (p * p.inverse()).is_identity()
    assert mintrans.Permutation.from_images(p.images()) == p

    c4 = mintrans.PermGroup(4, ["(1 2 3 4)"])
    assert c4.order() == 4 and c4.is_transitive() and c4.is_minimally_transitive()
    a = c4.subgroup(["(1 3)(2 4)"])
    assert a.order() == 2 and a.index() == 2 and a.is_mt_stabilizer()

    s4 = mintrans.PermGroup.from_catalog("S4")
    assert len(s4.subgroups()) == 30
    assert not s4.is_minimally_transitive()
    assert sorted(h.order() for h in s4.minimal_transitive_subgroups()) == [4, 4, 4, 4]
    assert s4.fitting().order() == 4 and s4.sylow(3).order() == 3
    assert s4.predicates()["is_solvable"]

    c75 = mintrans.PermGroup.from_catalog("C5^2:C3")
    image = c75.subgroup([str(c75.generators()[0])]).coset_image()
    assert image.degree == 15 and image.is_minimally_transitive()
    cls = image.classify_pq()
    assert cls["case"] == "P_normal_minimal_nonabelian" and cls["exponent"] == 2

    census = mintrans.mt_census(4)
    assert len(census) == 2 and all(e["kind"] == "census_entry" for e in census)
    assert [e["order"] for e in mintrans.mt_census(6)] == [6, 6, 12, 36]

    summary, suites = mintrans.verify(max_order=24)
    assert summary["total_violations"] == 0 and len(suites) == 15

    code, out, _ = mintrans.run_cli(["census", "--degree", "3"])
    assert code == 0 and out.startswith("degree 3: 1 class")

    try:
        mintrans.mt_census(11)
    except mintrans.BoundError:
        pass
    else:
        raise AssertionError("census above the bound must raise")
    try:
        mintrans.Permutation("(1 5)", 3)
    except mintrans.MintransError:
        pass
    else:
        raise AssertionError("bad cycle string must raise")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
