import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from chart import (
    SVG_NS, ChartEdge, ChartOptions, find_cliques, harmonic_edges, layout, render_svg
)
from config import CHART_CENTER, CHART_RADIUS, CHROMATIC_MODE, MINOR_MODE
from harmony import EXTENDED, STANDARD, enumerate_chords
from theory import Scale, enumerate_modes

FIRST_SEVEN = Scale((1, 2, 3, 4, 5, 6, 7))
GOLDEN = Path(__file__).parent / 'golden'


def svg_elements(data, tag):
    root = ET.fromstring(data)
    return list(root.iter(f'{{{SVG_NS}}}{tag}'))


def test_layout_starts_at_the_top():
    chart = layout(Scale((1, 7)))
    first, second = chart.entries
    assert first.x == pytest.approx(500.0) and first.y == pytest.approx(100.0)
    assert second.x == pytest.approx(500.0) and second.y == pytest.approx(900.0)
    assert first.label == 'A (1)'
    assert second.label == 'D# (7)'


def test_layout_points_share_the_radius(chromatic_scale):
    chart = layout(chromatic_scale)
    cx, cy = CHART_CENTER
    for entry in chart.entries:
        assert math.hypot(entry.x - cx, entry.y - cy) == pytest.approx(CHART_RADIUS, abs=1e-9)
    assert [e.tone for e in chart.entries] == list(range(1, 13))


def test_layout_position_lookup():
    chart = layout(Scale(MINOR_MODE))
    assert chart.position(1) == (chart.entries[0].x, chart.entries[0].y)
    with pytest.raises(KeyError):
        chart.position(2)


def test_harmonic_edges_of_a_triad():
    edges = harmonic_edges(Scale((1, 4, 8)), STANDARD)
    assert edges == [
        ChartEdge((1, 4), 3),
        ChartEdge((1, 8), 7),
        ChartEdge((4, 8), 4),
    ]


def test_first_seven_tones_edges_and_triangles():
    standard = harmonic_edges(FIRST_SEVEN, STANDARD)
    assert len(standard) == 9
    assert find_cliques(standard) == []

    extended = harmonic_edges(FIRST_SEVEN, EXTENDED)
    assert [c.tones for c in find_cliques(extended)] == [(1, 4, 7)]


def test_find_cliques_four_tones(chromatic_scale):
    edges = harmonic_edges(chromatic_scale, EXTENDED)
    fours = [c.tones for c in find_cliques(edges, max_size=4) if len(c.tones) == 4]
    assert fours == [(1, 4, 7, 10), (2, 5, 8, 11), (3, 6, 9, 12)]


@pytest.mark.parametrize('system', [STANDARD, EXTENDED])
def test_triangles_match_chords_for_every_mode(system):
    for k in range(1, 13):
        for mode in enumerate_modes(k):
            triangles = [c.tones for c in find_cliques(harmonic_edges(mode.canonical, system))]
            chords = [c.tones for c in enumerate_chords(mode.canonical, system) if c.size == 3]
            assert triangles == chords


def test_edges_ignore_endpoint_order():
    edges = harmonic_edges(Scale(MINOR_MODE), STANDARD)
    reversed_edges = [ChartEdge(tuple(reversed(e.endpoints)), e.interval) for e in edges]
    assert find_cliques(reversed_edges) == find_cliques(edges)


def test_render_chromatic(chromatic_scale):
    data = render_svg(chromatic_scale, STANDARD)
    assert data.startswith(b'<?xml version="1.0" encoding="UTF-8"?>')

    root = ET.fromstring(data)
    assert root.tag == f'{{{SVG_NS}}}svg'
    assert root.get('viewBox') == '0 0 1000 1000'
    assert len(svg_elements(data, 'line')) == 36
    assert len(svg_elements(data, 'polygon')) == 28
    assert len(svg_elements(data, 'text')) == 12


def test_render_extended_chromatic_adds_four_tone_chords(chromatic_scale):
    polygons = svg_elements(render_svg(chromatic_scale, EXTENDED), 'polygon')
    assert len(polygons) == 43
    assert polygons[0].get('data-tones') == '1,4,7'


def test_render_single_tone():
    data = render_svg(Scale((1,)), STANDARD)
    assert len(svg_elements(data, 'text')) == 1
    assert svg_elements(data, 'line') == []
    assert svg_elements(data, 'polygon') == []


def test_render_minor_labels():
    texts = [t.text for t in svg_elements(render_svg(Scale(MINOR_MODE), STANDARD), 'text')]
    assert len(texts) == 7
    assert texts[0] == 'A (1)'


def test_render_options():
    scale = Scale(MINOR_MODE)
    bare = render_svg(scale, STANDARD, ChartOptions(show_cliques=False, show_labels=False))
    assert svg_elements(bare, 'polygon') == []
    assert svg_elements(bare, 'text') == []
    assert len(svg_elements(bare, 'line')) == len(harmonic_edges(scale, STANDARD))


def test_render_coordinates_are_rounded():
    for line in svg_elements(render_svg(Scale(MINOR_MODE), STANDARD), 'line'):
        for attr in ('x1', 'y1', 'x2', 'y2'):
            value = line.get(attr)
            assert len(value.split('.')[1]) == 3
            assert not value.startswith('-0.000')


def test_render_is_deterministic(chromatic_scale):
    assert render_svg(chromatic_scale, STANDARD) == render_svg(chromatic_scale, STANDARD)
    assert render_svg(Scale(MINOR_MODE), EXTENDED) == render_svg(Scale(MINOR_MODE), EXTENDED)


def test_render_matches_the_reference_document():
    # Fichier de référence versionné: toute dérive du rendu casse ce test
    expected = (GOLDEN / 'chromatic_standard.svg').read_bytes()
    assert render_svg(Scale(CHROMATIC_MODE), STANDARD) == expected
