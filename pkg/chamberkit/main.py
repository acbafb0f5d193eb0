__package__ = 'chamberkit'

import sys
import platform

from pathlib import Path
from fractions import Fraction
from typing import List, Optional

from .cli import (
    list_subcommands,
    display_first,
    meta_cmds,
    main_cmds,
    compute_cmds,
)
from .util import enforce_types
from .errors import ParseError, WrongBasis
from .lattice import BasisTag, FormClass, change_basis, check_k, parse_form, parse_rational
from .reduction import orbit_representative, reduce_to_fundamental_domain, verify_trace as replay_trace
from .roots import enumerate_exceptional, enumerate_roots, positive_roots, roots_by_degree
from .invariants import analyze as analyze_form, emit_table, emit_q_table
from .curves import (
    check_open_configuration,
    enumerate_negative_spheres,
    lemma_classes_audit,
    min_exceptional_area,
    square_zero_spheres,
)
from .packing import PackingSpec, cremona_to_packing_form, relative_packing_feasible
from .braid import abelianization, build_presentation, parse_word, span_check, word_image
from .report import JSON, TEXT, render_json, render_q_table, render_report, render_table
from .report.text import rows_to_text
from .config import (
    stderr,
    CONFIG,
    USER_CONFIG,
    ANSI,
    VERSION,
    OUTPUT_DIR,
    get_real_name,
)
from .logging_util import (
    log_discrepancies,
    log_phase_finished,
    log_phase_started,
    log_warning,
    pretty_path,
    printable_config,
)


@enforce_types
def help(out_dir: Path=OUTPUT_DIR) -> None:
    """Print the chamberkit help message and usage"""

    all_subcommands = list_subcommands()
    COMMANDS_HELP_TEXT = '\n    '.join(
        f'{cmd.ljust(20)} {summary}'
        for cmd, summary in all_subcommands.items()
        if cmd in meta_cmds
    ) + '\n\n    ' + '\n    '.join(
        f'{cmd.ljust(20)} {summary}'
        for cmd, summary in all_subcommands.items()
        if cmd in main_cmds
    ) + '\n\n    ' + '\n    '.join(
        f'{cmd.ljust(20)} {summary}'
        for cmd, summary in all_subcommands.items()
        if cmd in compute_cmds
    ) + '\n\n    ' + '\n    '.join(
        f'{cmd.ljust(20)} {summary}'
        for cmd, summary in all_subcommands.items()
        if cmd not in display_first
    )

    print('''{green}chamberkit v{}: exact arithmetic on symplectic classes of CP2#k(-CP2).{reset}

{lightred}Usage:{reset}
    chamberkit [command] [--help] [--version] [...args]

{lightred}Commands:{reset}
    {}

{lightred}Example Use:{reset}
    chamberkit analyze "(1 | 1/3, 1/3, 1/3, 1/3, 1/3)"
    chamberkit table 4 --markdown --compare-published
    chamberkit table q
    chamberkit roots 6
    chamberkit reduce "(3 | 2, 1, 1/2)" --normalize --trace reduction.trace
    chamberkit curves "(2, 1 | 1/2, 1/4)" --families --audit 6
    chamberkit packing 2/5 3/10 1/4 1/5 1/10 --cremona
    chamberkit braid abelianize 5
'''.format(VERSION, COMMANDS_HELP_TEXT, **ANSI))


@enforce_types
def version(quiet: bool=False, out_dir: Path=OUTPUT_DIR) -> None:
    """Print the chamberkit version and runtime information"""

    print(VERSION)

    if not quiet:
        p = platform.uname()
        print(
            'chamberkit v{}'.format(VERSION),
            sys.implementation.name.title(),
            p.system,
            platform.platform(),
            p.machine,
        )
        print(
            f'THREADS={CONFIG["THREADS"]}',
            f'ITERATION_CAP={CONFIG["ITERATION_CAP"]}',
            f'ORBIT_LIMIT={CONFIG["ORBIT_LIMIT"]}',
            f'AUDIT_BOUND={CONFIG["AUDIT_BOUND"]}',
            f'PYTHON={CONFIG["PYTHON_VERSION"]}',
        )
        print()
        print('{white}[i] Schema:{reset}'.format(**ANSI))
        print('    {}'.format(pretty_path(CONFIG['SCHEMA_FILE']) if CONFIG['SCHEMA_FILE'] else '(not found)'))


@enforce_types
def config(config_options: Optional[List[str]]=None, get: bool=False, out_dir: Path=OUTPUT_DIR) -> None:
    """Print the resolved chamberkit configuration values"""

    config_options = [get_real_name(key) for key in (config_options or [])]
    if config_options:
        failed_config = [key for key in config_options if key not in CONFIG]
        if failed_config:
            stderr()
            stderr('[X] These options failed to get', color='red')
            stderr('    {}'.format('\n    '.join(failed_config)))
            raise SystemExit(1)
        matching_config = {key: CONFIG[key] for key in config_options}
    elif get:
        stderr('[X] Pass the KEYs to get, or no arguments to print the whole config.', color='red')
        stderr('    chamberkit config')
        stderr('    chamberkit config --get THREADS')
        raise SystemExit(1)
    else:
        matching_config = {key: val for key, val in CONFIG.items() if key in USER_CONFIG}

    print(printable_config(matching_config))


### Computations


@enforce_types
def analyze(form: str, fmt: str=TEXT, with_headers: bool=False, show_trace: bool=False) -> None:
    """Reduce a symplectic form and report its Lagrangian system, N, pi0, pi1 and Q"""

    w = parse_form(form)
    report = analyze_form(w)
    if report.flags:
        log_warning(f'{report.label or report.manifold}: ' + ', '.join(report.flags))
    log_discrepancies(list(report.paper_discrepancies))

    if fmt == TEXT:
        from .report.text import report_to_text
        print(report_to_text(report, trace=show_trace))
    else:
        print(render_report(report, fmt=fmt, with_headers=with_headers))


@enforce_types
def table(which: str, fmt: str=TEXT, compare: bool=False, with_headers: bool=False) -> None:
    """Regenerate the face table of CP2#k (k = 2..5), or the Q summary with 'q'"""

    if which.lower() == 'q':
        log_phase_started('assembled', 'Q for CP2#1..5 and S2xS2')
        rows = emit_q_table()
        log_phase_finished('assembled', len(rows), 'manifolds')
        print(render_q_table(rows, fmt=fmt, with_headers=with_headers))
        return

    if not which.isdigit():
        raise ParseError(f'Could not parse table {which!r}', hints='Pass k = 2..5, or q for the Q summary')
    k = int(which)
    check_k(k, 2, 5)
    log_phase_started('assembled', f'faces of the reduced cone of CP2#{k}')
    doc = emit_table(k)
    log_phase_finished('assembled', len(doc.rows), 'faces')
    if compare:
        log_discrepancies(doc.discrepancies)
    print(render_table(doc, fmt=fmt, compare=compare, with_headers=with_headers))


@enforce_types
def roots(k: int, exceptional: bool=False, positive: bool=False, fmt: str=TEXT) -> None:
    """List the -2 (or -1 with --exceptional) classes of CP2#k"""

    check_k(k, 1, 8)
    log_phase_started('enumerated', f'{"exceptional" if exceptional else "root"} classes of CP2#{k}')
    if exceptional:
        classes = list(enumerate_exceptional(k).classes)
    elif positive:
        classes = list(positive_roots(BasisTag.H(k)))
    else:
        classes = list(enumerate_roots(k).roots)
    log_phase_finished('enumerated', len(classes), 'classes')

    if fmt == JSON:
        print(render_json({
            'k': k,
            'kind': 'exceptional' if exceptional else ('positive' if positive else 'roots'),
            'count': len(classes),
            'byDegree': {str(d): n for d, n in roots_by_degree(classes).items()},
            'classes': [c.to_literal() for c in classes],
        }, kind='roots'))
        return
    for c in classes:
        print(c.to_literal())


@enforce_types
def reduce(form: str,
           normalize: bool=False,
           trace_file: Optional[str]=None,
           oracle: bool=False,
           fmt: str=TEXT) -> None:
    """Move a symplectic class into the fundamental domain and record the Cremona moves"""

    w = parse_form(form)
    reduced, trace = reduce_to_fundamental_domain(w, normalize=normalize)
    if trace_file:
        Path(trace_file).write_text(trace.render(), encoding='utf-8')
        stderr(f'    > Saved the trace to {pretty_path(trace_file)}')

    representative = None
    if oracle:
        h_form = w if w.basis.is_h else change_basis(w, w.basis.counterpart())
        representative = orbit_representative(h_form)

    if fmt == JSON:
        payload = {'input': w, 'reduced': reduced, 'trace': trace}
        if representative is not None:
            payload['oracle'] = representative
        print(render_json(payload, kind='reduction'))
        return
    print(reduced.to_literal())
    if representative is not None:
        print(representative.to_literal())
    if not trace_file:
        print()
        print(trace.render(), end='')


def _bf_reduced(w: FormClass) -> FormClass:
    if w.basis.is_h:
        if w.basis.n < 2:
            raise WrongBasis(f'{w.basis} has no B/F picture', hints='Sphere families start at CP2#2 = BFBasis(1)')
        w = change_basis(w, w.basis.counterpart())
    reduced, _ = reduce_to_fundamental_domain(w)
    return reduced


@enforce_types
def curves(form: str,
           families: bool=False,
           square_zero: bool=False,
           audit: Optional[int]=None,
           configuration: bool=False,
           fmt: str=TEXT) -> None:
    """Negative sphere families, square zero spheres, the simple-class audit and J_open configurations"""

    w = _bf_reduced(parse_form(form))
    families = families or not (square_zero or audit is not None or configuration)
    payload: dict = {'form': w}

    if families:
        payload['families'] = enumerate_negative_spheres(w)
        if w.basis.n >= 1:
            payload['minExceptional'] = min_exceptional_area(change_basis(w, w.basis.counterpart()))
    if square_zero:
        payload['squareZero'] = square_zero_spheres(w.basis.n)
    if audit is not None:
        log_phase_started('enumerated', f'classes in the box of size {audit}')
        report = lemma_classes_audit(w, bound=audit)
        log_phase_finished('enumerated', report.checked, 'classes')
        payload['audit'] = report
        if not report.ok:
            log_warning(f'{len(report.violations)} classes break the simple-class conclusions')
    if configuration:
        found = check_open_configuration(w.basis)
        payload['configuration'] = found
        if not found.covers:
            log_warning(f'{len(found.uncovered)} negative classes are not cut out by the configuration of {w.basis}')

    if fmt == JSON:
        print(render_json(payload, kind='curves'))
        return

    print(w.to_literal())
    for family in payload.get('families', ()):
        print(f'{family.family}: ' + (', '.join(a.to_literal() for a in family.members) or '-'))
    if 'minExceptional' in payload:
        cls, value = payload['minExceptional']
        print(f'least exceptional area: {cls.to_literal()} = {value}')
    if square_zero:
        print('square zero: ' + ', '.join(a.to_literal() for a in payload['squareZero']))
    if audit is not None:
        report = payload['audit']
        census = ', '.join(f'{key}: {val}' for key, val in report.census.items())
        print(f'audit at bound {report.bound}: {report.checked} classes ({census}), {len(report.violations)} violations')
    if configuration:
        found = payload['configuration']
        print('configuration: ' + ', '.join(a.to_literal() for a in found.members))
        print('uncovered: ' + (', '.join(a.to_literal() for a in found.uncovered) or '-'))


@enforce_types
def packing(sizes: List[str], cremona: bool=False, fmt: str=TEXT) -> None:
    """Decide five-ball packings relative to RP2, or move a balanced form of CP2#5 with --cremona"""

    values: List[Fraction] = [parse_rational(s) for s in sizes]
    payload: dict = {}
    if cremona:
        w = FormClass((Fraction(1), *values), BasisTag.H(5))
        moved = cremona_to_packing_form(w)
        payload['cremona'] = moved
        spec = moved.packing_spec
    else:
        spec = PackingSpec(tuple(values))
    result = relative_packing_feasible(spec)
    payload['packing'] = result

    if fmt == JSON:
        print(render_json(payload, kind='packing'))
        return

    if cremona:
        print(f'reflect in {moved.root.to_literal()}: {moved.form.to_literal()}')
        print('checks: ' + ', '.join(f'{c.to_literal()} = {v}' for c, v in moved.checks))
    print('sizes: ' + ', '.join(str(c) for c in spec.sizes))
    print(('feasible' if result.feasible else 'infeasible') + (' (boundary)' if result.boundary else ''))
    print(f'slack {result.slack} on {result.tightest.to_literal() if result.tightest else "-"}')


@enforce_types
def braid(action: str, n: int, rest: Optional[List[str]]=None, quotient: bool=True, fmt: str=TEXT) -> None:
    """Abelian invariants of pure sphere braid groups: abelianize, span or word"""

    p = build_presentation(n, quotient_full_twist=quotient)
    rest = rest or []
    if action == 'abelianize':
        group = abelianization(p)
        if fmt == JSON:
            print(render_json({'presentation': p, 'abelianization': group}, kind='braid'))
        else:
            print(group)
    elif action == 'span':
        subset = [single_generator(p, token) for token in ' '.join(rest).replace(',', ' ').split()]
        spans = span_check(p, subset)
        if fmt == JSON:
            print(render_json({'n': n, 'subset': rest, 'spans': spans}, kind='braid'))
        else:
            print('spans' if spans else 'does not span')
    elif action == 'word':
        image = word_image(p, ''.join(rest))
        if fmt == JSON:
            print(render_json(image, kind='braid'))
        else:
            print(rows_to_text(['generator', 'exponent'], [[g, str(e)] for g, e in image['exponents'].items()]))
            print('trivial' if image['trivial'] else 'non-trivial')
    else:
        raise ValueError(f'unknown braid action {action!r}')


def single_generator(p, token: str):
    """'A24' or 'A_{2,4}' -> (2, 4)"""
    vector = parse_word(token, p)
    if sorted(vector, reverse=True)[:2] != [1, 0] or sum(vector) != 1:
        raise ParseError(f'{token!r} is not a single generator', hints='List generators like A24 A25 A34')
    return p.generators[vector.index(1)]


@enforce_types
def verify_trace(path: str) -> None:
    """Replay a saved reduction trace and confirm it lands on its recorded END form"""

    if not Path(path).is_file():
        raise ParseError(f'No trace file at {path}', hints='Write one with chamberkit reduce --trace FILE')
    text = Path(path).read_text(encoding='utf-8')
    trace = replay_trace(text)
    print(f'{len(trace.steps)} steps replay {trace.start.to_literal()} to {trace.end.to_literal()}')

