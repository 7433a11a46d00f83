"""Smoke test for the p5hom_py extension module.

Build the module first:

    cargo build --release -p p5hom-py

then run `python3 python/smoke_test.py`. Set P5HOM_PY_LIB to point at a
specific shared library instead of the one under target/.
"""

import importlib.util
import os
import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    candidates = [os.environ.get("P5HOM_PY_LIB")] + [
        ROOT / "target" / profile / "libp5hom_py.so" for profile in ("release", "debug")
    ]
    lib = next((Path(c) for c in candidates if c and Path(c).exists()), None)
    if lib is None:
        sys.exit("libp5hom_py.so not found; run `cargo build --release -p p5hom-py`")
    # The import machinery wants the module name as the file name.
    target = Path(tempfile.mkdtemp()) / "p5hom_py.so"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("p5hom_py", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    p5 = load()

    c5 = p5.Instance(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], "K2")
    sol = c5.solve()
    assert sol.weight == 4, sol
    assert c5.verify(sol) is None
    assert c5.oracle().weight == 4
    assert len(sol.coloring) == 4

    gem = p5.Instance(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)], "K2")
    assert gem.solve(parallel=2).weight == 4

    lists = p5.Instance(3, [(0, 1), (1, 2), (0, 2)], "K2", lists=[[0], [1], [0, 1]])
    assert lists.solve().weight == 2

    weighted = p5.Instance(3, [(0, 1)], "P3", weights=[Fraction(1, 2), "3/4", 2])
    assert weighted.solve().weight == Fraction(13, 4)
    assert weighted.weights == [Fraction(1, 2), Fraction(3, 4), 2]

    path = p5.Instance(5, [(0, 1), (1, 2), (2, 3), (3, 4)], "K2")
    assert not path.is_p5_free()
    assert path.find_induced_p5() == [0, 1, 2, 3, 4]
    try:
        path.solve()
    except ValueError as e:
        assert "P5" in str(e)
    else:
        raise AssertionError("solve accepted a P5")
    assert path.oracle().weight == 5

    a = p5.generate("cograph", 8, "K3", seed=7, list_density="0.7", max_weight=9, max_denominator=4)
    b = p5.generate("cograph", 8, "K3", seed=7, list_density="0.7", max_weight=9, max_denominator=4)
    assert a == b and a.to_text() == b.to_text()
    assert p5.Instance.parse(a.to_text()) == a
    assert a.solve().weight == a.oracle().weight
    assert all(len(m) > 0 for m in a.family())

    text = sol.to_text()
    assert text.startswith("weight 4/1\n")
    assert p5.Solution.parse(text).weight == 4

    chosen, weight = p5.solve_mwis(4, [(0, 1), (1, 2), (2, 3)], [2, 1, 1, 2])
    assert chosen == [0, 3] and weight == 4

    try:
        p5.Instance(2, [(0, 0)], "K2")
    except ValueError:
        pass
    else:
        raise AssertionError("self-loop accepted")

    print("p5hom_py smoke test passed (version %s)" % p5.__version__)


if __name__ == "__main__":
    main()
