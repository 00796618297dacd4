"""Incidence counting for ka(7,11,13): local profiles, a grown patch, the verdict."""
from __future__ import annotations

from tessella.aperiodicity import incidence_census, periodicity_contradiction
from tessella.families import ka
from tessella.heesch import constructive_build


def main() -> None:
    t = ka(7, 11, 13)
    v = periodicity_contradiction(t)
    print("pentagon edge words:", v.pentagon_words)
    for line in v.arithmetic:
        print(line)
    p = constructive_build(t, 3)
    for a, b in ((3, 5), (5, 3)):
        c = incidence_census(p, a, b)
        print(f"{c.faces} interior {a}-gons, profiles against {b}-gons: {dict(c.profiles)}")
    print(v.verdict, v.ratio_text())


if __name__ == "__main__":
    main()
