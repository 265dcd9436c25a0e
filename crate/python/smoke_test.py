"""Smoke test for the p2walls extension module.

Build with `cargo build --release -p p2walls-py`, copy `target/release/libp2walls.so`
to `p2walls.so` somewhere on `PYTHONPATH`, then run this file.
"""

import json
from fractions import Fraction

import p2walls


def main():
    w = (4, 0, -15)
    assert p2walls.exceptional("-3/2") == ("2", "-3", "3/2")
    assert p2walls.chi((2, -3, Fraction(3, 2)), w) == "2"
    assert p2walls.position((1, 0, -1)) == "On"
    line, case, e_w = p2walls.last_wall(w)
    assert (line, case, e_w) == ("(4,12,15)", "AboveCase", "-3/2"), (line, case, e_w)
    assert p2walls.moduli_dim((1, 0, -4)) == "8"

    summary = json.loads(p2walls.walls_json(w))
    assert summary["schema"] == "p2walls/1"
    fan = summary["fans"][0]
    assert len(fan["walls"]) == 32
    assert fan["nef"]["v"] == ["4/1", "-1/1", "-5/2"], fan["nef"]

    both = json.loads(p2walls.walls_json(w, side="both"))
    assert [f["side"] for f in both["fans"]] == ["left", "right"]

    for bad in [lambda: p2walls.walls_json((1, 0, Fraction(1, 2))), lambda: p2walls.walls_json(w, side="up")]:
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
