import json

import jsonschema

from .fixtures import *


SCHEMA = json.loads((ROOT_DIR / 'chamberkit' / 'schemas' / 'report-v1.json').read_text(encoding='utf-8'))


def out(result):
    return result.stdout.decode('utf-8')


def err(result):
    return result.stderr.decode('utf-8')


def test_help(run):
    result = run('help')
    assert result.returncode == 0
    assert 'Usage:' in out(result)
    assert 'analyze' in out(result)


def test_version(run):
    result = run('version', '--quiet')
    assert result.returncode == 0
    assert out(result).strip() == json.loads((ROOT_DIR / 'chamberkit' / 'package.json').read_text())['version']


def test_version_finds_the_packaged_schema(run):
    result = run('version')
    assert result.returncode == 0, err(result)
    assert 'chamberkit/schemas/report-v1.json' in out(result)
    assert '(not found)' not in out(result)


def test_analyze_json_matches_schema(run):
    result = run('analyze', '--json', '(1 | 1/3, 1/3, 1/3, 1/3, 1/3)')
    assert result.returncode == 0, err(result)
    report = json.loads(out(result))
    jsonschema.validate(report, SCHEMA)
    assert report['face'] == 'M'
    assert report['gammaL'] == 'D5'
    assert report['N'] == 0
    assert report['NL'] == 20
    assert report['Q'] == 15


def test_analyze_json_with_headers(run):
    result = run('analyze', '--json', '--with-headers', '(1 | 1/2, 1/3)')
    assert result.returncode == 0, err(result)
    document = json.loads(out(result))
    jsonschema.validate(document, SCHEMA)
    assert document['kind'] == 'report'
    assert document['report']['face'] == 'BOA'


def test_analyze_interval_wall(run):
    result = run('analyze', '--json', '(1 | 1/2, 1/4, 1/4, 1/4, 1/4)')
    assert result.returncode == 0, err(result)
    report = json.loads(out(result))
    jsonschema.validate(report, SCHEMA)
    assert report['face'] == 'MA'
    assert report['pi1']['kind'] == 'interval'
    assert report['Q'] is None
    assert 'pi1-interval' in err(result)


def test_analyze_text(run):
    result = run('analyze', '(1 | 1/2, 1/4, 1/8)')
    assert result.returncode == 0, err(result)
    assert 'MOAB' in out(result)
    assert 'CP2#3' in out(result)


def test_table_markdown(run):
    result = run('table', '3', '--markdown')
    assert result.returncode == 0, err(result)
    lines = out(result).strip().splitlines()
    assert lines[0] == '### Faces of the reduced cone of CP2#3'
    assert len(lines) == 2 + 2 + 8
    assert lines[-1].startswith('| MOAB |')


def test_table_compare_published(run):
    result = run('table', '4', '--compare-published')
    assert result.returncode == 0, err(result)
    assert 'MAC: printed π₁ rank 7, derived 8' in err(result)


def test_q_table(run):
    result = run('table', 'q', '--json')
    assert result.returncode == 0, err(result)
    rows = {row['manifold']: row['Q'] for row in json.loads(out(result))}
    assert rows == {'CP2#1': 1, 'CP2#2': 3, 'CP2#3': 6, 'CP2#4': 10, 'CP2#5': 15, 'S2xS2': 1}


def test_roots(run):
    result = run('roots', '6')
    assert result.returncode == 0, err(result)
    assert len(out(result).strip().splitlines()) == 72
    assert '] Enumerated finished (' in err(result)
    assert '    - 72 classes' in err(result)

    result = run('roots', '3', '--json', '--exceptional')
    assert json.loads(out(result))['count'] == 6


def test_reduce_and_verify_trace(run):
    result = run('reduce', '(6 | 3, 2, 2)', '--normalize', '--trace', 'reduction.trace')
    assert result.returncode == 0, err(result)
    assert out(result).strip() == '(1 | 2/5, 1/5, 1/5)'

    result = run('verify-trace', 'reduction.trace')
    assert result.returncode == 0, err(result)
    assert 'to (1 | 2/5, 1/5, 1/5)' in out(result)


def test_verify_tampered_trace(run, tmp_path):
    (tmp_path / 'bad.trace').write_text('START (1 | 1/4, 1/3)\nPERMUTE 1 2\nEND (1 | 1/4, 1/3)\n')
    result = run('verify-trace', 'bad.trace')
    assert result.returncode == 2
    assert '[X]' in err(result)

    result = run('verify-trace', 'missing.trace')
    assert result.returncode == 1


def test_exit_codes(run):
    assert run('analyze', '(1 | 0.5, 0.25)').returncode == 1
    assert run('analyze', '(1 | 1/0)').returncode == 1
    assert run('analyze', '--not-a-flag', '(1 | 1/2)').returncode == 1
    assert run('table', 'six').returncode == 1
    assert run('table', '6').returncode == 2
    assert run('analyze', '(1 | 1, 1)').returncode == 2
    assert run('analyze', '(1 | 1/2, 1/2, 1/2)').returncode == 2


def test_curves(run):
    result = run('curves', '(3, 1 | 1/2)', '--families', '--square-zero')
    assert result.returncode == 0, err(result)
    text = out(result)
    assert 'B-class: ' in text
    assert 'least exceptional area: ' in text
    assert 'square zero: B, F' in text


def test_packing(run):
    result = run('packing', '1/4', '1/4', '1/4', '1/4', '1/4')
    assert result.returncode == 0, err(result)
    assert 'feasible' in out(result).splitlines()

    result = run('packing', '--cremona', '1/2', '1/5', '1/5', '1/5', '1/10')
    assert result.returncode == 0, err(result)
    assert out(result).startswith('reflect in H - E3 - E4 - E5')


def test_braid(run):
    assert out(run('braid', 'abelianize', '5')).strip() == 'Z^5'
    assert out(run('braid', '--no-quotient', 'abelianize', '4')).strip() == 'Z^2 ⊕ Z2'
    assert out(run('braid', 'span', '4', 'A12', 'A13')).strip() == 'spans'
    assert out(run('braid', 'word', '5', 'A14A24A34A45')).strip().splitlines()[-1] == 'trivial'
    assert run('braid', 'abelianize', '2').returncode == 2
