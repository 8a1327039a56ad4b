# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------

import numpy as np
from twoofn import baseline, copula, orderstats
from twoofn.els import ELSConfig
from twoofn.theorems import suite


def main():
    # Run a short randomized suite for a few theorems
    for theorem_id in ["T3_1", "T3_4", "T3_9i"]:
        report = suite.property_suite(theorem_id, trials=20, seed=1)
        print(report.to_record())
        for index, verdict, dump in report.inconsistencies:
            print("    trial {}: {}".format(index, dump))

    # Compare the dependent CDF with its Monte Carlo estimate under a Clayton copula
    power = baseline.create_baseline("PowerCap", a=0.2, c=100)
    cfg = ELSConfig(4, (5, 9, 10), 4, power, copula.create_generator("Clayton", theta=2.0))
    xs = np.linspace(10, 90, 9)
    distance = orderstats.mc_sup_distance(cfg, xs, samples=100000, seed=7)
    print("Clayton sup distance over {} points: {:.4f}".format(len(xs), distance))


if __name__ == "__main__":
    main()
