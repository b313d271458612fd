"""Shared test plumbing: one pass/fail summary line per acceptance criterion."""

CRITERIA = [
    ("test_criterion_1_theorem1_grid",
     "criterion 1: Z_p verdict+index match brute force, p in {2,3,5,7}, n,m in [1,48]"),
    ("test_criterion_2_corollary1_grid",
     "criterion 2: Z_m three-way agreement and index <= n, m in [2,36], n in [1,36]"),
    ("test_criterion_3_lemma1_triple_agreement",
     "criterion 3: congruence count closed form = recursion = enumeration, all c"),
    ("test_criterion_4_identity_suite",
     "criterion 4: index expansion identity; witness and annihilation on nilpotent cells"),
    ("test_criterion_5_ring_properties",
     "criterion 5: 1000 Frobenius + 1000 geometric-series checks + ring axioms"),
    ("test_criterion_6_cli_contract",
     "criterion 6: CLI golden files and exit-code contract"),
]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            name = report.nodeid.rsplit("::", 1)[-1]
            outcomes[name] = "PASS" if status == "passed" else "FAIL"
    lines = [
        f"{outcomes[name]}  {label}"
        for name, label in CRITERIA
        if name in outcomes
    ]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
