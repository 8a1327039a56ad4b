# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------

import os
import sys
from twoofn.theorems import fixtures


def main(directory):
    # The plot data of each fixture goes to <directory>/<fixture>.csv
    if not os.path.isdir(directory):
        os.makedirs(directory)

    for name in fixtures.fixture_names():
        fixture = fixtures.get_fixture(name)
        print("{}: {}".format(name, fixture.description))

        # Check the fixture's theorem and write the data of its conclusion order
        verdict = fixtures.run_fixture(name, csv_path=os.path.join(directory, fixture.csv_name))
        print("    " + verdict.summary())

        # Counterexamples are expected to fail; a failed check only matters if it is inconsistent
        if not verdict.consistent:
            print("    unexpected: every hypothesis holds but the conclusion fails")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "plots")
