from .report import CheckResult, VerificationReport, first_failure, serialize
from .suites import SUITES, run_suites
