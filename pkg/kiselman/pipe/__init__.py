import datetime
from ..count import CLOSED_FORMULAS, compare_counts, count_grid
from ..errors import DomainError
from ..export import (
    dn_listing, dn_table, element_listing, endo_listing, kn_table, mn_listing, render, rules_listing, write_text
)
from ..matrix import enumerate_dn
from ..morphism import brute_force_enumerate_end, monotone_enumerate_end
from ..semigroup import get_semigroup
from ..sequence import enumerate_mn
from ..utils.logging import init_logger, close_logger
from ..verify import run_suites

EXIT_OK = 0
EXIT_FAILURE = 1


def count_row(row):
    """ A count comparison with the counts as decimal strings

    :param row: a row from compare_counts
    :type row: Dict[str, object]
    :return: the printable row
    :rtype: Dict[str, object]
    """

    return {
        "m": row["m"],
        "n": row["n"],
        "closed": "" if row["closed"] is None else str(row["closed"]),
        "brute": str(row["brute"]),
        "agree": "agree" if row["agree"] else "disagree",
    }


class KiselmanPipe(object):
    """ The command-line driver: one cmd_* method per subcommand, each returning an exit code

    """
    def __init__(self, opt):
        self.opt = opt
        self.n_workers = opt.n_workers
        self.logger = init_logger(log_file=opt.log_path, quiet=opt.quiet)

    def close(self):
        close_logger(self.logger)

    def run(self):
        self.logger.info("Starting %s." % (self.opt.command))
        try:
            code = getattr(self, "cmd_" + self.opt.command.replace("-", "_"))()
        finally:
            self.logger.info("Ending.")
            self.close()
        return code

    def emit(self, payload, rows, columns, trailer=""):
        text = render(payload, rows, self.opt.output_format, columns)
        if self.opt.output_format == "table" and trailer:
            text += trailer
        write_text(text, self.opt.output_path)

    def semigroup(self):
        return get_semigroup(self.opt.n, self.opt.max_rules)

    def cmd_elements(self):
        opt = self.opt
        sg = self.semigroup()
        elements = sg.enumerate_elements(opt.max_elements)
        code = EXIT_OK
        if opt.idempotents_only:
            elements = [x for x in elements if sg.is_idempotent(x)]
            if len(elements) != 1 << opt.n:
                self.logger.error("K_%d has %d idempotents instead of %d." % (opt.n, len(elements), 1 << opt.n))
                code = EXIT_FAILURE
        payload, rows, columns = element_listing(sg, elements)
        payload["idempotents_only"] = opt.idempotents_only
        self.emit(payload, rows, columns, trailer="count: %d\n" % (len(elements)))
        return code

    def cmd_endos(self):
        opt = self.opt
        if opt.method == "brute":
            endos = brute_force_enumerate_end(
                opt.n, max_n=opt.max_n, n_workers=self.n_workers, max_rules=opt.max_rules, progress=opt.progress
            )
        else:
            endos = monotone_enumerate_end(opt.n, max_n=opt.max_n)
        n_mn = len(enumerate_mn(opt.n, max_n=opt.max_n))
        n_dn = len(enumerate_dn(opt.n))
        code = EXIT_OK
        if not len(endos) == n_mn == n_dn:
            self.logger.error(
                "|End(K_%d)| = %d by %s search, |M_%d| = %d, |D_%d| = %d." %
                (opt.n, len(endos), opt.method, opt.n, n_mn, opt.n, n_dn)
            )
            code = EXIT_FAILURE
        payload, rows, columns = endo_listing(opt.n, endos)
        payload.update({"method": opt.method, "mn_count": n_mn, "dn_count": n_dn})
        self.emit(payload, rows, columns, trailer="count: %d\n" % (len(endos)))
        return code

    def cmd_count(self):
        opt = self.opt
        if opt.grid:
            rows = count_grid(
                opt.guard_bits, n_workers=self.n_workers, progress=opt.progress, include_brute_only=opt.brute_only
            )
        else:
            if opt.m not in CLOSED_FORMULAS and not opt.brute_only:
                raise DomainError(
                    "Error: no closed formula for m = %d; pass --brute-only to count by brute force alone." % (opt.m)
                )
            rows = [compare_counts(opt.m, opt.n, guard_bits=opt.guard_bits, n_workers=self.n_workers, progress=opt.progress)]
        agree = all(row["agree"] for row in rows)
        printable = [count_row(row) for row in rows]
        payload = {
            "rows": [dict(row, closed=row["closed"] or None, agree=source["agree"]) for row, source in zip(printable, rows)],
            "agree": agree,
        }
        self.emit(payload, printable, ["m", "n", "closed", "brute", "agree"])
        if not agree:
            self.logger.error("Closed formulas and brute force disagree.")
        return EXIT_OK if agree else EXIT_FAILURE

    def cmd_verify(self):
        opt = self.opt
        reports = run_suites(opt, opt.suites)
        passed = all(report.passed for report in reports)
        payload = {"reports": [report.to_dict(timestamp=opt.timestamp) for report in reports], "passed": passed}
        if opt.timestamp:
            payload["generated_at"] = datetime.datetime.now().isoformat(timespec="seconds")
        rows = [
            {"suite": report.suite, "property": check.property_id, "scope": check.scope,
             "passed": "pass" if check.passed else "FAIL"}
            for report in reports for check in report.checks
        ]
        self.emit(payload, rows, ["suite", "property", "scope", "passed"])
        for report in reports:
            for check in report.checks:
                if not check.passed:
                    self.logger.error("%r: counterexample %r" % (check, check.counterexample))
        self.logger.info("%d suites, %s." % (len(reports), "all checks pass" if passed else "some checks FAIL"))
        return EXIT_OK if passed else EXIT_FAILURE

    def cmd_export(self):
        opt = self.opt
        what = opt.what
        if what == "elements":
            sg = self.semigroup()
            result = element_listing(sg, sg.enumerate_elements(opt.max_elements))
        elif what == "kn-table":
            sg = self.semigroup()
            result = kn_table(sg, sg.enumerate_elements(opt.max_elements))
        elif what == "dn":
            result = dn_listing(opt.n)
        elif what == "dn-table":
            result = dn_table(opt.n)
        elif what == "mn":
            result = mn_listing(opt.n, enumerate_mn(opt.n, max_n=opt.max_n))
        elif what == "endos":
            result = endo_listing(opt.n, monotone_enumerate_end(opt.n, max_n=opt.max_n))
        elif what == "rules":
            result = rules_listing(self.semigroup().rs)
        else:
            raise DomainError("Error: %s is not supported." % (what))
        self.emit(*result)
        self.logger.info("Exported %s for n=%d." % (what, opt.n))
        return EXIT_OK
