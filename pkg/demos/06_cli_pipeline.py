"""
Command-line pipeline
=====================

Construct instances, run the checks and aggregate everything into a CSV
with SVG drawings of the planar instances.
"""
import sys
import tempfile
from pathlib import Path

from eslab.cli import main

work = Path(tempfile.mkdtemp(prefix="eslab-"))
for d, l in [(2, 4), (2, 5), (3, 5)]:
    for i in (2, 3):
        common = ["--d", str(d), "--l", str(l), "--i", str(i), "--seed", "1", "--out", str(work)]
        main(["construct", "--kind", "Y", *common])
        main(["lemma4", *common])
        main(["recurrence", *common])

y = work / "Y_d2_l4_i3_s1.json"
print("verify exit code:", main(["verify", str(y), "--assert-incidence-below", "4",
                                  "--out", str(work / "verify")]))
main(["report", str(work), "--svg", "--out", str(work / "report" / "summary.csv")])
sys.stdout.write((work / "report" / "summary.csv").read_text())
print("outputs in", work)
