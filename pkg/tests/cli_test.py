"""Test the CLI commands"""
import os
import click
import pytest
from click.testing import CliRunner

from stategrid.cli import main
from stategrid.cli.demo import continuity_demo, intelligence_demo
from stategrid.cli.predicate import parse_expression, place_expression
from stategrid.cli.universe import create_universe, add_universe_cell, observe_value, \
    evaluate_expression, report_universe, check_universe_codomain
from stategrid.cli.realtime import tick_universe, predict, verify
from stategrid.cli.translate import translate_universe, classify
from stategrid.cli.util import split_list, symbols_to_vocabulary, depths_to_dict, \
    registry_from_file, exit_on_error
from stategrid.errors import DocumentFormatError
from stategrid.reader import load_universe
from stategrid.writer import universe_to_document

SHOP = './tests/assets/shop.sgu'
SHOP_MAP = './tests/assets/shop_boutique.sgm'
DEPTHS = './tests/assets/depths.txt'


def _write(folder, name, text):
    path = str(folder / name)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    return path


def test_asset_is_canonical():
    """Test the shop asset re-saves byte for byte."""
    with open(SHOP, 'r', encoding='utf-8', newline='') as f:
        text = f.read()
    assert universe_to_document(load_universe(SHOP)) == text


def test_util():
    """Test the option helpers."""
    assert split_list('') == []
    assert split_list(' a, b,,c ') == ['a', 'b', 'c']
    vocab = symbols_to_vocabulary(['S=set', 'f=map:2'])
    assert vocab.names == ('S', 'f')
    assert depths_to_dict(['S=2', 'f=0']) == {'S': 2, 'f': 0}
    assert registry_from_file(DEPTHS).depth('f') == 2


def test_registry_file_errors(tmp_path):
    """Test a malformed registry file reports its line."""
    path = _write(tmp_path, 'bad.txt', '# depths\ndepth S 2\ndepth f two\n')
    try:
        registry_from_file(path)
    except DocumentFormatError as e:
        assert e.line == 3
    else:
        raise AssertionError('A malformed depth line was accepted.')


def test_exit_on_error(caplog):
    """Test the exit codes and the logged traceback of failed commands."""
    for error, code in ((ValueError('bad'), 1),
                        (DocumentFormatError(3, 'bad'), 2)):
        caplog.clear()
        with pytest.raises(SystemExit) as info:
            try:
                raise error
            except Exception as e:
                exit_on_error(e, 'Command failed.')
        assert info.value.code == code
        record = caplog.records[-1]
        assert record.levelname == 'ERROR'
        assert record.exc_info is not None
        assert record.getMessage().startswith('Command failed.')
    caplog.clear()
    with pytest.raises(SystemExit) as info:
        exit_on_error(click.UsageError('two options'), 'Command failed.')
    assert info.value.code == 2
    assert not caplog.records


def test_parse():
    """Test printing the canonical form of predicate text."""
    assert parse_expression('card( I@(i+1) )>card(I@i)') == \
        'card(I@(i+1)) > card(I@i)\n'
    assert parse_expression('card(S) = 2', SHOP) == 'card(S) = 2\n'
    runner = CliRunner()
    result = runner.invoke(main, ['parse', '(a and b) or c'])
    assert result.exit_code == 0
    assert 'a and b or c' in result.output
    result = runner.invoke(main, ['parse', 'f('])
    assert result.exit_code == 1
    result = runner.invoke(main, ['parse', 'card(Q) = 1', '--universe', SHOP])
    assert result.exit_code == 1


def test_place():
    """Test placing an expression with depths from a file."""
    table = place_expression('card(S) = 1', registry=DEPTHS, symbol=['S=set'])
    lines = table.splitlines()
    assert lines[0] == 'depth\thierarchy\ttime\tlabels'
    # no truth-value component without a judgment
    assert lines[1].startswith('2\t0\t0\t')
    assert lines[1].split('\t')[3] == 'S'
    assert len(place_expression('card(I@i) = 2', universe=SHOP).splitlines()) > 2
    runner = CliRunner()
    result = runner.invoke(main, ['place', 'card(S) = 1', '-s', 'S=set'])
    assert result.exit_code == 1
    result = runner.invoke(main, ['place', 'card(I@i) = 2', '-u', SHOP,
                                  '--mode', 'elevating', '--time', '2'])
    assert result.exit_code == 0
    result = runner.invoke(main, ['place', 'card(S) = 1', '--mode', 'sideways'])
    assert result.exit_code == 2


def test_new_and_add_cell(tmp_path):
    """Test creating a universe and adding cells to it."""
    text = create_universe('depot', ['S=set', 'I=family'], ['S=2'])
    assert 'universe depot\n' in text
    assert 'symbol I kind=family\nsymbol S kind=set\n' in text
    assert 'depth S 2\n' in text
    path = _write(tmp_path, 'depot.sgu', text)
    text = add_universe_cell(path, 'c1', '(2,0)', label='shelves', ground='S',
                             tag=['existence'])
    assert 'cell c1 coord=(2,0,0) label="shelves" kind=ground name=S def=true ' \
        'tags=existence\n' in text
    path = _write(tmp_path, 'depot.sgu', text)
    text = add_universe_cell(path, 'c2', '(1,0)', label='verdict', truth='undef',
                             undefinable=True)
    assert 'kind=truth value=undef def=undef' in text

    runner = CliRunner()
    result = runner.invoke(main, ['add-cell', path, 'c1', '(2,0)', '--ground', 'S'])
    assert result.exit_code == 1
    result = runner.invoke(main, ['add-cell', path, 'zz', '(2,0)', '--ground', 'S',
                                  '--truth', 'true'])
    assert result.exit_code == 2
    assert '--ground, --truth' in result.output
    with pytest.raises(click.UsageError):
        add_universe_cell(path, 'zz', '(2,0)')
    result = runner.invoke(main, ['add-cell', path, 'c9', '(2,0)'])
    assert result.exit_code == 1
    out_file = str(tmp_path / 'more.sgu')
    result = runner.invoke(main, ['add-cell', path, 'c9', '(2,2,0)', '--expr',
                                  'card(S) = 2', '-o', out_file])
    assert result.exit_code == 0
    assert load_universe(out_file).grid.cell('c9').label == ''
    result = runner.invoke(main, ['new', 'bad', '--symbol', 'S'])
    assert result.exit_code == 1


def test_observe_eval_report(tmp_path):
    """Test observations, evaluation and the grid table."""
    assert evaluate_expression(SHOP, 'card(S) = 2') == 'true\n'
    assert evaluate_expression(SHOP, 'f(1) = 1') == 'undef\n'
    path = _write(tmp_path, 'shop.sgu', observe_value(SHOP, 'f', '{(1,1),(2,1)}'))
    assert evaluate_expression(path, 'forall x in S . f(x) = 1') == 'true\n'
    assert report_universe(SHOP) == 'depth\thierarchy\ttime\tlabels\n' \
        '2\t0\t0\tshelves\n2\t1\t0\tpricing\n2\t2\t0\ttwo inputs, flat price\n'

    runner = CliRunner()
    result = runner.invoke(main, ['eval', SHOP, 'card(S) = 2', '--time', '1'])
    assert result.exit_code == 1
    result = runner.invoke(main, ['eval', SHOP, 'card(Q) = 2'])
    assert result.exit_code == 1
    result = runner.invoke(main, ['eval', SHOP])
    assert result.exit_code == 2
    result = runner.invoke(main, ['observe', SHOP, 'S', '{1,'])
    assert result.exit_code == 1


def test_document_errors(tmp_path):
    """Test malformed documents exit like usage errors."""
    path = _write(tmp_path, 'future.sgu', 'stategrid-universe v9\nend\n')
    result = CliRunner().invoke(main, ['report', path])
    assert result.exit_code == 2
    path = _write(tmp_path, 'cut.sgu', 'stategrid-universe v1\nuniverse cut\n')
    result = CliRunner().invoke(main, ['report', path])
    assert result.exit_code == 2


def test_check_codomain(tmp_path):
    """Test the codomain report before and after observing the mapping."""
    assert not check_universe_codomain(SHOP)
    out_file = str(tmp_path / 'report.txt')
    result = CliRunner().invoke(main, ['check-codomain', SHOP, '-o', out_file])
    assert result.exit_code == 1
    with open(out_file) as f:
        assert f.read() == 'c4\tf\n'
    path = _write(tmp_path, 'shop.sgu', observe_value(SHOP, 'f', '{(1,1),(2,1)}'))
    assert check_universe_codomain(path)
    result = CliRunner().invoke(main, ['check-codomain', path])
    assert result.exit_code == 0
    assert 'verifiable' in result.output


def test_tick_predict_verify(tmp_path):
    """Test a prediction settled after a tick."""
    text = predict(SHOP, 'c3', 'true', 1)
    assert 'prediction c3 claim=true at=1 status=pending\n' in text
    path = _write(tmp_path, 'predicted.sgu', text)
    ticked = tick_universe(path, 'I,c1')
    assert 'snapshot t=1\nfamily t=1 I = {a,b}\n' in ticked
    assert 'carrier t=1' not in ticked
    assert 'cell c1..t1 coord=(2,0,1)' in ticked
    path = _write(tmp_path, 'ticked.sgu', ticked)
    assert 'prediction c3 claim=true at=1 status=confirmed\n' in verify(path)

    runner = CliRunner()
    result = runner.invoke(main, ['predict', SHOP, '-c', 'c3', '--claim', 'true',
                                  '--at', '0'])
    assert result.exit_code == 1
    result = runner.invoke(main, ['predict', SHOP, '-c', 'c3', '--claim', 'undef',
                                  '--at', '1'])
    assert result.exit_code == 2
    result = runner.invoke(main, ['tick', SHOP, '--mask', 'nothing'])
    assert result.exit_code == 1
    result = runner.invoke(main, ['verify', path])
    assert result.exit_code == 0


def test_translate():
    """Test translating the shop universe to another vocabulary."""
    text = translate_universe(SHOP, SHOP_MAP)
    assert 'universe boutique\n' in text
    assert 'expr="card(J@i) = 2"' in text
    assert 'expr="forall x in E . g(x) = 1"' in text
    assert 'untranslated' not in text


def test_merge(tmp_path):
    """Test merging two edits of the shop universe."""
    a = _write(tmp_path, 'a.sgu', observe_value(SHOP, 'f', '{(1,1),(2,1)}'))
    b = _write(tmp_path, 'b.sgu', add_universe_cell(
        SHOP, 'c5', '(1,0)', label='verdict', truth='true'))
    out_file = str(tmp_path / 'merged.sgu')
    runner = CliRunner()
    result = runner.invoke(main, ['merge', SHOP, a, b, '-o', out_file])
    assert result.exit_code == 0
    merged = load_universe(out_file)
    assert merged.grid.cell('c5').label == 'verdict'
    assert merged.models[0].graph('f') is not None

    left = _write(tmp_path, 'left.sgu', observe_value(SHOP, 'S', '{1}'))
    right = _write(tmp_path, 'right.sgu', observe_value(SHOP, 'S', '{2}'))
    result = runner.invoke(main, ['merge', SHOP, left, right, '-o', out_file])
    assert result.exit_code == 1
    assert os.path.isfile(out_file)
    assert load_universe(out_file).models[0].carrier('S') is None


def test_classify(tmp_path):
    """Test classifying operations on the shop universe."""
    assert classify(SHOP, map_file=SHOP_MAP) == 'macrocosm\tproof\n'
    assert classify(SHOP, mask='S') == 'microcosm\tverification\n'
    assert classify(SHOP, mask='S,I,f') == 'macrocosm\tproof\n'
    assert classify(SHOP, names='') == 'microcosm\tverification\n'
    a = _write(tmp_path, 'a.sgu', observe_value(SHOP, 'f', '{(1,1),(2,1)}'))
    assert classify(a, merge_files=(SHOP, SHOP)) == 'microcosm\tverification\n'
    runner = CliRunner()
    result = runner.invoke(main, ['classify', SHOP, '--mask', 'S', '--names', 'f'])
    assert result.exit_code == 2
    assert '--mask, --names' in result.output
    result = runner.invoke(main, ['classify', SHOP])
    assert result.exit_code == 2
    with pytest.raises(click.UsageError):
        classify(SHOP, mask='S', names='S')
    result = runner.invoke(main, ['classify', SHOP, '--map', SHOP_MAP])
    assert result.exit_code == 0
    assert 'macrocosm' in result.output


def test_demo():
    """Test the bundled demos."""
    lines = continuity_demo().splitlines()
    assert lines[0] == 'depth\thierarchy\ttime\tlabels'
    assert lines[1] == '1\t0\t0\tTruth values {True, False}'
    assert lines[7] == '5\t3\t0\tCont(f)'
    assert lines[8:] == [
        'Cont(f) on the identity fixture: true',
        'Cont(f) on the step fixture: false',
        'Cont(f) with f uninterpreted: undef'
    ]
    lines = intelligence_demo().splitlines()
    assert lines[9] == '3\t5\t0\tInt'
    assert lines[10] == 'Int at i=0: false'
    assert lines[-1] == 'Int over the window 0,1: true'
    runner = CliRunner()
    result = runner.invoke(main, ['demo', 'grid'])
    assert result.exit_code == 0
    assert 'continuity and differentiability tests' in result.output
    result = runner.invoke(main, ['demo', 'cont'])
    assert result.exit_code == 0
