"""Quick check that the raag_flags extension loads and agrees with known values.

Build and run:
    cargo build --release -p raag-py
    cp target/release/libraag_flags.so python/raag_flags.so
    python3 python/smoke_test.py
"""

import raag_flags

p3 = raag_flags.Graph("a b\nb c\n")
assert len(p3) == 3 and p3.labels == ["a", "b", "c"]
assert p3.leq("a", "c") and p3.leq("c", "a") and not p3.leq("b", "a")
assert p3.normal_form("a b a^-1") == "b"
assert p3.is_identity("a c a^-1 c^-1") is False
assert p3.is_identity("a b a^-1 b^-1") is True

flags = p3.flags()
tops = [(e["level"], e["top_class"]) for e in flags["hyperedges"]]
assert tops == [(1, ["b"]), (2, ["a", "c"])], tops

assert "transvection(a,b)" in p3.laurence_generators()
assert "E1:center-transvect(a,b)" in p3.aut1_generators()

report = p3.factor()
assert report["failures"] == 0, report
assert report["verified"] == 12 and report["symmetry_residues"] == 1, report

checks = p3.verify15()
assert checks["failures"] == 0 and checks["excluded_hyperedges"] == [0], checks

p4 = raag_flags.Graph.path(4)
assert len(p4.decompositions()) == 4

graphs = raag_flags.corpus(5)
assert len(graphs) == 29

print("raag_flags smoke test: ok")
