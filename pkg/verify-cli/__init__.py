# Verify CLI package
# Runs verification suites and emits identity tables
