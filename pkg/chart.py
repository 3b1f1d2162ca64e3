"""
Module du diagramme des accords harmoniques
Tons répartis sur un cercle, arêtes harmoniques, triangles complets -> SVG
"""

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from itertools import combinations

from config import (
    CANVAS_SIZE, CHART_CENTER, CHART_RADIUS, CIRCLE_STROKE, CLIQUE_FILL, CLIQUE_FILL_OPACITY,
    COORD_PRECISION, EDGE_STROKE_WIDTH, INTERVAL_COLORS, LABEL_FONT_FAMILY, LABEL_FONT_SIZE,
    LABEL_OFFSET, POINT_FILL, POINT_RADIUS
)
from logger import logger
from theory import format_tones, interval, tone_name

SVG_NS = 'http://www.w3.org/2000/svg'


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True)
class LayoutEntry:
    tone: int
    label: str
    x: float
    y: float
    angle: float


@dataclass(frozen=True)
class ChartLayout:
    entries: tuple
    radius: float
    center: tuple

    def position(self, tone):
        for entry in self.entries:
            if entry.tone == tone:
                return entry.x, entry.y
        raise KeyError(tone)


@dataclass(frozen=True, order=True)
class ChartEdge:
    endpoints: tuple
    interval: int


@dataclass(frozen=True, order=True)
class ChartClique:
    tones: tuple


@dataclass(frozen=True)
class ChartOptions:
    show_cliques: bool = True
    show_labels: bool = True
    max_clique_size: int = None   # None: taille maximale du système (3 ou 4)


# ============================================================
# GÉOMÉTRIE
# ============================================================

def layout(scale, center=CHART_CENTER, radius=CHART_RADIUS):
    """
    Place les k tons à intervalles réguliers sur un cercle

    Le premier ton est en haut (-90°), puis sens horaire.

    Returns:
        ChartLayout: positions et étiquettes "A (1)"
    """
    k = len(scale.tones)
    cx, cy = center
    entries = []
    for i, tone in enumerate(scale.tones):
        angle = -90.0 + 360.0 * i / k
        theta = math.radians(angle)
        entries.append(LayoutEntry(
            tone=tone,
            label=f"{tone_name(tone)} ({tone})",
            x=cx + radius * math.cos(theta),
            y=cy + radius * math.sin(theta),
            angle=angle
        ))
    return ChartLayout(entries=tuple(entries), radius=radius, center=(cx, cy))


def harmonic_edges(scale, system):
    """Une arête par paire de tons séparés par un intervalle harmonique"""
    return sorted(
        ChartEdge(endpoints=(a, b), interval=interval(a, b))
        for a, b in combinations(sorted(scale.tones), 2)
        if interval(a, b) in system.intervals
    )


def find_cliques(edges, max_size=3):
    """
    Sous-graphes complets de taille 3 (et 4 si demandé) du graphe des arêtes

    Args:
        edges: Arêtes de harmonic_edges()
        max_size: 3 ou 4

    Returns:
        list: ChartClique triées par tons
    """
    neighbours = {}
    for edge in edges:
        a, b = sorted(edge.endpoints)
        neighbours.setdefault(a, set()).add(b)
        neighbours.setdefault(b, set()).add(a)

    # Extension d'une clique par des voisins communs plus grands que son dernier ton
    cliques = []
    frontier = [(a, b) for a in sorted(neighbours) for b in sorted(neighbours[a]) if b > a]
    for size in range(3, max_size + 1):
        grown = []
        for clique in frontier:
            common = set.intersection(*(neighbours[t] for t in clique))
            grown.extend(clique + (c,) for c in sorted(common) if c > clique[-1])
        cliques.extend(grown)
        frontier = grown

    return sorted(ChartClique(tones) for tones in cliques)


# ============================================================
# RENDU SVG
# ============================================================

def _fmt(value):
    text = f"{value:.{COORD_PRECISION}f}"
    # Pas de "-0.000" selon la plateforme
    return '0.' + '0' * COORD_PRECISION if text == '-0.' + '0' * COORD_PRECISION else text


def _label_position(entry, chart):
    cx, cy = chart.center
    theta = math.radians(entry.angle)
    distance = chart.radius + LABEL_OFFSET
    return cx + distance * math.cos(theta), cy + distance * math.sin(theta)


def render_svg(scale, system, options=None):
    """
    Document SVG 1.1 du diagramme: cercle, tons, arêtes, accords

    Les sorties sont identiques octet pour octet à entrées identiques.

    Returns:
        bytes: Document UTF-8
    """
    options = options or ChartOptions()
    chart = layout(scale)
    edges = harmonic_edges(scale, system)

    max_size = options.max_clique_size or max(3, min(system.max_chord_size, 4))
    cliques = find_cliques(edges, max_size) if options.show_cliques else []

    size = str(CANVAS_SIZE)
    root = ET.Element('svg', {
        'xmlns': SVG_NS,
        'version': '1.1',
        'width': size,
        'height': size,
        'viewBox': f"0 0 {size} {size}"
    })
    ET.SubElement(root, 'title').text = f"Mode {format_tones(scale.tones)} - {system.name}"

    cx, cy = chart.center
    ET.SubElement(root, 'circle', {
        'cx': _fmt(cx), 'cy': _fmt(cy), 'r': _fmt(chart.radius),
        'fill': 'none', 'stroke': CIRCLE_STROKE, 'stroke-width': '2'
    })

    # Accords sous les arêtes
    group = ET.SubElement(root, 'g', {'id': 'cliques'})
    for clique in cliques:
        points = ' '.join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (chart.position(t) for t in clique.tones)
        )
        ET.SubElement(group, 'polygon', {
            'points': points,
            'fill': CLIQUE_FILL,
            'fill-opacity': str(CLIQUE_FILL_OPACITY),
            'stroke': 'none',
            'data-tones': format_tones(clique.tones)
        })

    group = ET.SubElement(root, 'g', {'id': 'edges'})
    for edge in edges:
        (x1, y1), (x2, y2) = (chart.position(t) for t in edge.endpoints)
        ET.SubElement(group, 'line', {
            'x1': _fmt(x1), 'y1': _fmt(y1), 'x2': _fmt(x2), 'y2': _fmt(y2),
            'stroke': INTERVAL_COLORS.get(edge.interval, '#000000'),
            'stroke-width': str(EDGE_STROKE_WIDTH),
            'data-interval': str(edge.interval)
        })

    group = ET.SubElement(root, 'g', {'id': 'tones'})
    for entry in chart.entries:
        ET.SubElement(group, 'circle', {
            'cx': _fmt(entry.x), 'cy': _fmt(entry.y), 'r': str(POINT_RADIUS), 'fill': POINT_FILL
        })
        if options.show_labels:
            lx, ly = _label_position(entry, chart)
            text = ET.SubElement(group, 'text', {
                'x': _fmt(lx), 'y': _fmt(ly),
                'text-anchor': 'middle',
                'dominant-baseline': 'middle',
                'font-family': LABEL_FONT_FAMILY,
                'font-size': str(LABEL_FONT_SIZE)
            })
            text.text = entry.label

    ET.indent(root, space='  ')
    body = ET.tostring(root, encoding='unicode')

    logger.debug(
        f"Diagramme {format_tones(scale.tones)}: {len(edges)} arêtes, {len(cliques)} accords"
    )
    return ('<?xml version="1.0" encoding="UTF-8"?>\n' + body + '\n').encode('utf-8')
