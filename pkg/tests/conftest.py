import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import helpers  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not helpers.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(helpers.ACCEPTANCE):
        title, ok, seconds, detail = helpers.ACCEPTANCE[number]
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({seconds:.2f}s)"
        terminalreporter.write_line(line + (f" -- {detail}" if detail else ""))
