"""
Prometheus metrics for command runs, written to a text file on request
"""
from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

registry = CollectorRegistry()

formula_checks = Counter(
    "stratchi_formula_checks_total",
    "Formula checks by outcome",
    ["formula", "outcome"],
    registry=registry,
)
fuzz_trials = Counter("stratchi_fuzz_trials_total", "Fuzz trials run", registry=registry)
input_errors = Counter("stratchi_input_errors_total", "Invocations rejected for invalid input", registry=registry)
command_latency = Histogram(
    "stratchi_command_latency_ms",
    "Command wall time in milliseconds",
    ["command"],
    buckets=(1, 5, 10, 50, 100, 500, 1000, 5000, 30000, 60000),
    registry=registry,
)


def record_report(report) -> None:
    formula_checks.labels(formula=report.formula, outcome="pass" if report.passed else "fail").inc()


def write_metrics(path: str) -> None:
    """Dump the registry in text exposition format"""
    write_to_textfile(path, registry)
