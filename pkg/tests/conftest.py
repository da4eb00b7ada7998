def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, title, _ in CRITERIA:
        if key in RESULTS:
            ok, msg = RESULTS[key]
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {key}: {msg}")
        else:
            terminalreporter.write_line(f"SKIP criterion {key}: {title}")
