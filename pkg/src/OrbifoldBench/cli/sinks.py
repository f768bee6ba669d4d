# sinks.py - OrbifoldBench - report renderers, fixed width tables and json

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import json
import sys


def _table(headers, rows, indent='  '):
    """ Left aligned columns, two spaces apart.

    Args:
        headers (list of str): column titles
        rows (list of list): cell values, rendered with str()

    Returns:
        (list of str): the lines
    """
    cells = [list(headers)] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]

    lines = []
    for row in cells:
        lines.append(indent + '  '.join(c.ljust(w) for c, w in zip(row, widths)).rstrip())

    return lines


def _class_text(result):
    # [[sector, generator, "p/q"], ...] -> "2*h[1/3] + s[0]"
    if len(result) == 0:
        return '0'

    terms = []
    for sector, generator, c in result:
        if c == '1':
            terms.append('{}[{}]'.format(generator, sector))
        else:
            terms.append('{}*{}[{}]'.format(c, generator, sector))

    return ' + '.join(terms)


def _sectors_table(document):
    lines = ['atlas {}, dim {}, group {}'.format(document['kind'], document['ambient_dim'], document['group'])]

    lines.append('sectors')
    lines.extend(_table(['label', 'model', 'dim', 'iota', 'weight'],
                        [[s['label'], s['model'], s['dim'], s['iota'], s['weight']] for s in document['sectors']]))

    lines.append('multisectors')
    lines.extend(_table(['labels', 'model', 'dim', 'K_order', 'k', 'genus', 'rank_E'],
                        [['({})'.format(', '.join(m['labels'])), m['model'], m['dim'], m['K_order'],
                          '({})'.format(','.join(str(k) for k in m['branch_orders'])), m['genus'], m['rank_E']]
                         for m in document['multisectors']]))

    return lines


def _cohomology_table(document):
    lines = ['poincare polynomial: {}'.format(document['poincare_polynomial'])]

    lines.append('total')
    lines.extend(_table(['degree', 'dim'], [[d, n] for d, n in document['total'].items()]))

    lines.append('sectors')
    lines.extend(_table(['label', 'model', 'shift', 'series', 'dims'],
                        [[s['label'], s['model'], s['shift'], s['series'],
                          ' '.join('{}:{}'.format(d, n) for d, n in s['dims'].items())]
                         for s in document['sectors']]))

    lines.append('basis')
    lines.extend(_table(['index', 'sector', 'generator', 'degree'],
                        [[i, b['sector'], b['generator'], b['degree']] for i, b in enumerate(document['basis'])]))

    return lines


def _ring_table(document):
    lines = ['status: {}'.format(document['status'])]
    if document['normalization']:
        lines.append('oracle normalization: {}'.format(document['normalization']))

    lines.append('basis: {}'.format(', '.join(document['basis'])))

    zeros = 0
    rows = []
    for entry in document['products']:
        if entry['status'] != 'complete':
            rows.append([entry['left'], 'x', entry['right'], '=', 'pending oracle'])
        elif len(entry['result']) == 0:
            zeros += 1
        else:
            rows.append([entry['left'], 'x', entry['right'], '=', _class_text(entry['result'])])

    lines.append('products ({} zero products not shown)'.format(zeros))
    lines.extend(_table(['left', '', 'right', '', 'result'], rows))

    if len(document['missing']) > 0:
        lines.append('missing oracle entries')
        lines.extend(_table(['labels', 'monomial', 'rank_E', 'dim'],
                            [['({})'.format(', '.join(m['labels'])), m['monomial'], m['rank_E'], m['dim']]
                             for m in document['missing']]))

    return lines


def _verify_table(document):
    lines = ['verify: {}'.format('PASS' if document['passed'] else 'FAIL')]

    counts = {}
    for check in document['checks']:
        passed, failed = counts.get(check['name'], (0, 0))
        counts[check['name']] = (passed + 1, failed) if check['passed'] else (passed, failed + 1)

    lines.append('checks')
    lines.extend(_table(['name', 'passed', 'failed'], [[name, p, f] for name, (p, f) in counts.items()]))
    lines.append('skipped: {}'.format(document['skipped']))
    lines.append('failed: {}'.format(document['failures']))

    failures = [c for c in document['checks'] if not c['passed']]
    if len(failures) > 0:
        lines.append('failures')
        lines.extend(_table(['name', 'location', 'detail'],
                            [[c['name'], c['location'], c['detail']] for c in failures]))

    if len(document['rows']) > 0:
        lines.append('pairing')
        lines.extend(_table(['sector', 'degree', 'dim', 'partner', 'partner_degree', 'partner_dim'],
                            [[r['sector'], r['degree'], r['dim'], r['partner'], r['partner_degree'],
                              r['partner_dim']] for r in document['rows']]))

    lines.append('notes')
    lines.extend('  - {}'.format(note) for note in document['notes'])

    return lines


TABLES = {'sectors': _sectors_table,
          'cohomology': _cohomology_table,
          'ring': _ring_table,
          'verify': _verify_table}


def render(document, output_format):
    """ Render a command report.

    Args:
        document (dict): the report, with a 'command' field
        output_format (str): 'table' or 'json'

    Returns:
        (str): the text, newline terminated
    """
    if output_format == 'json':
        return json.dumps(document, indent=2) + '\n'

    return '\n'.join(TABLES[document['command']](document)) + '\n'


def write(text, out_path=None):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, 'w', encoding='utf-8') as f:
            f.write(text)

    return
