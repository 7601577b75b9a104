"""One logged care episode, three training datasets.

A PD-controller expert treats two simulated patients while acting at
irregular intervals (it is re-consulted every 10 to 120 minutes). The
same atomic log then becomes three datasets:

  unprocessed    one record per true decision, with its duration and the
                 discount-accrued reward of the held interval
  interpolated   one record per 10-minute base step, as if every step
                 were an independent decision
  binned-12      fixed 2-hour windows: observations and actions averaged,
                 rewards summed, true timing destroyed

With an undiscounted view the three agree on total reward, so nothing
looks lost on paper; what differs is the decision structure a learner
sees.
"""

import numpy as np

from orl import dataset as ds
from orl import experts as ex
from orl import glucose as gl


def main():
    expert = ex.make_glucose_expert(0.7, seed=1)
    patients = [p for p in gl.make_cohorts(5) if p.split == "train"][:2]
    log = ds.collect_glucose(expert, patients, 4000, seed=3)
    n_base = sum(len(ep.rewards) for ep in log.episodes)
    print(f"collected {len(log.episodes)} episodes, {n_base} base steps of 10 simulated minutes")
    print()

    variants = {
        "unprocessed": ds.to_unprocessed(log, gamma=1.0),
        "interpolated": ds.to_interpolated(log),
        "binned-12": ds.to_binned(log, 12),
    }
    print(f"{'variant':<14}{'records':>8}{'mean dt':>9}{'reward mass':>13}")
    for name, ts in variants.items():
        mass = float(np.sum(ts.rewards))
        print(f"{name:<14}{len(ts.rewards):>8}{float(np.mean(ts.dts)):>9.2f}{mass:>13.1f}")
    print()

    un = variants["unprocessed"]
    counts = {int(d): int(np.sum(un.dts == d)) for d in np.unique(un.dts)}
    print("unprocessed interval mix (base steps held per decision):")
    print("  " + "  ".join(f"dt={d}:{n}" for d, n in sorted(counts.items())))
    print()
    print("interpolated multiplies every long hold into look-alike decisions;")
    print("binning collapses on average "
          f"{n_base / len(variants['binned-12'].rewards):.1f} steps into each record")


if __name__ == "__main__":
    main()
