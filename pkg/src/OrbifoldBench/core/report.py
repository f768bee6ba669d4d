# report.py - OrbifoldBench - containers for pass/fail checks

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later


class Check(object):
    """ The outcome of one named check.

    Args:
        name (str): what was checked, e.g. 'rank-even'
        location (str): which part of the atlas, e.g. 'multisectors[4]'
        passed (bool): outcome
        detail (str): human readable explanation, empty when passed
    """

    def __init__(self, name, location, passed, detail=''):
        self.name = name
        self.location = location
        self.passed = bool(passed)
        self.detail = detail

        return

    def __repr__(self):
        return 'Check({}, {}, {})'.format(self.name, self.location, 'pass' if self.passed else 'FAIL')

    def to_document(self):
        return {'name': self.name,
                'location': self.location,
                'passed': self.passed,
                'detail': self.detail}


class Report(object):
    """ A named list of checks plus free form notes and table rows.

    A report passes when every check passes. Skipped work is counted, not
    failed.
    """

    def __init__(self, name):
        self.name = name
        self.checks = []
        self.notes = []
        self.rows = []
        self.skipped = 0

        return

    def __len__(self):
        return len(self.checks)

    def __getitem__(self, index):
        return self.checks[index]

    def append(self, check):
        self.checks.append(check)
        return

    def add(self, name, location, passed, detail=''):
        self.append(Check(name, location, passed, detail))
        return

    def extend(self, report):
        self.checks.extend(report.checks)
        self.notes.extend(report.notes)
        self.rows.extend(report.rows)
        self.skipped += report.skipped

        return

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_document(self):
        return {'name': self.name,
                'passed': self.passed,
                'checks': [c.to_document() for c in self.checks],
                'failures': len(self.failures),
                'skipped': self.skipped,
                'notes': list(self.notes),
                'rows': list(self.rows)}
