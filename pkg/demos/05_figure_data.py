"""Emit the plotting datasets as CSV files into ./figure_data/.

Three datasets:
  real_zeta.csv       Z(u) on the real interval (-1/3, 1/3)
  sheets_abs.csv      |Z| over the t-disk, both u-roots per t (two sheets)
  imag_branchcut.csv  Im Z from the principal formula on a u-grid; the jumps
                      across the circle |u| = 1/sqrt(3) and the real slits
                      are the expected principal-branch artifacts
"""

import pathlib
import subprocess
import sys

out = pathlib.Path("figure_data")
out.mkdir(exist_ok=True)

jobs = {
    "real_zeta.csv": ["plot", "--kind", "real_zeta", "--range=-0.33:0.33", "--samples", "301"],
    "sheets_abs.csv": ["plot", "--kind", "sheets_abs", "--samples", "4096", "--radius", "0.6"],
    "imag_branchcut.csv": ["plot", "--kind", "imag_branchcut", "--range=-1.2:1.2", "--samples", "10000"],
}

for name, argv in jobs.items():
    res = subprocess.run(
        [sys.executable, "-m", "gridzeta.cli", *argv], capture_output=True, text=True
    )
    if res.returncode != 0:
        print(f"{name}: FAILED\n{res.stderr}")
        continue
    path = out / name
    path.write_text(res.stdout)
    print(f"{name}: {len(res.stdout.splitlines()) - 1} rows -> {path}")
