"""Run the bundled verification battery and print its table."""

from dpcolor.verify import format_table, run_all

reports = run_all(seed=0)
print(format_table(reports))
print(f"\n{sum(r.passed for r in reports)}/{len(reports)} checks passed")
