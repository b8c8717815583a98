"""Run the whole identity registry and print the text report.

Equivalent to `zetalab verify`; takes a couple of seconds.
"""

import sys

from zetalab import render_report, run_checks

prefix = sys.argv[1] if len(sys.argv) > 1 else None
results = run_checks(prefix)
sys.stdout.write(render_report(results, "text"))
sys.exit(0 if all(r.status != "fail" for r in results) else 1)
