"""Heesch searches on a few small types and on the first member of the kn family."""
from __future__ import annotations

from tessella import CyclicType, heesch_number
from tessella.families import kn

SMALL = [[4, 7, 10], [5, 6, 8], [3, 3, 3, 3, 7], [4, 5, 4, 5]]


def main() -> None:
    for e in SMALL:
        r = heesch_number(CyclicType(e), 3, threads=1)
        print(f"{CyclicType(e)}: {r} after {r.nodes} nodes")
    t = kn(1)
    r = heesch_number(t, 2, threads=1)
    print(f"kn(1) = {t}: {r} after {r.nodes} nodes")
    if r.witness is not None:
        print(f"  witness: {r.witness.n_faces} faces, {r.witness.completed_layers} layers")


if __name__ == "__main__":
    main()
