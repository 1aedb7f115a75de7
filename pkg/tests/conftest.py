def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance summary lines after capture is released."""
    try:
        from test_acceptance import ACCEPT_LINES
    except ImportError:
        return
    if ACCEPT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPT_LINES:
            terminalreporter.write_line(line)
