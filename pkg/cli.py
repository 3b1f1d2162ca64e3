"""
Point d'entrée en ligne de commande
list-modes, rank, landscape, analyze, chart, compose
"""

import sys

import click

from chart import ChartOptions, find_cliques, harmonic_edges, render_svg
from composer import ComposerConfig, SequenceSource, compose, parse_rhythm_palette
from config import BASE_MIDI_NOTE, DEFAULT_RHYTHM, MAJOR_MODE, OCTAVE_SIZE, TEMPO, TICKS_PER_QUARTER
from errors import MusicTheoryError
from harmony import (
    HarmonicSystem, enumerate_chords, is_classical_pattern, musicality, musicality_landscape,
    rank_modes
)
from logger import logger, set_console_level
from reporting import get_duet_summary, get_top_modes
from score_io import MidiConfig, save_midi, save_text_score
from theory import (
    canonicalize, enumerate_modes, format_names, format_tones, parse_scale, parse_tone, transpose
)
from validation import validate_duet, validate_midi_range


class ScaleType(click.ParamType):
    """Gamme en numéros ("1,3,5") ou en noms ("A,B,C#")"""
    name = 'mode'

    def convert(self, value, param, ctx):
        try:
            return parse_scale(value)
        except MusicTheoryError as e:
            self.fail(str(e), param, ctx)


class ToneType(click.ParamType):
    name = 'tone'

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            value = str(value)
        try:
            return parse_tone(value)
        except MusicTheoryError as e:
            self.fail(str(e), param, ctx)


SCALE = ScaleType()
TONE = ToneType()
TONE_COUNT = click.IntRange(1, OCTAVE_SIZE)

extended_option = click.option(
    '--extended', is_flag=True, help="Compte aussi le triton (6 demi-tons) comme harmonique."
)


def _fail(error):
    logger.error(f"{type(error).__name__}: {error}")
    raise click.ClickException(str(error)) from error


def _scale_at(scale, root):
    """Gamme analysée: telle quelle, ou le mode de la gamme posé sur root"""
    if root is None:
        return scale
    return transpose(canonicalize(scale), root)


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--verbose', is_flag=True, help="Affiche les logs INFO sur stderr.")
def cli(verbose):
    """Modes musicaux, accords harmoniques et duos composés à partir de suites d'entiers."""
    if verbose:
        set_console_level('INFO')


@cli.command('list-modes')
@click.option('--k', 'k', type=TONE_COUNT, required=True, help="Nombre de tons (1..12).")
@extended_option
def list_modes(k, extended):
    """Liste les modes à K tons (ordre lexicographique) avec leur musicalité."""
    system = HarmonicSystem.from_flag(extended)
    for mode in enumerate_modes(k):
        click.echo(f"{format_tones(mode.tones)}\t{musicality(mode, system)}")


@cli.command()
@click.option('--k', 'k', type=TONE_COUNT, required=True, help="Nombre de tons (1..12).")
@click.option('--top', type=click.IntRange(min=1), default=None, help="N premiers modes seulement.")
@extended_option
def rank(k, top, extended):
    """Classe les modes à K tons par musicalité décroissante."""
    reports = rank_modes(k, HarmonicSystem.from_flag(extended))
    if top is not None:
        reports = get_top_modes(reports, top)
    for position, report in enumerate(reports, 1):
        click.echo(f"{position}\t{format_tones(report.mode.tones)}\t{report.musicality}")


@cli.command()
@extended_option
def landscape(extended):
    """Musicalité maximale et nombre de modes qui l'atteignent, pour k = 1..12."""
    for k, (best, count) in musicality_landscape(HarmonicSystem.from_flag(extended)).items():
        click.echo(f"{k}\t{best}\t{count}")


@cli.command()
@click.option('--mode', 'scale', type=SCALE, required=True, help="Ex.: 1,3,4,6,8,9,11 ou A,B,C,D,E,F,G")
@click.option('--root', type=TONE, default=None, help="Pose le mode sur ce ton (nom ou numéro).")
@extended_option
def analyze(scale, root, extended):
    """Accords et motifs de pas d'une gamme."""
    system = HarmonicSystem.from_flag(extended)
    try:
        scale = _scale_at(scale, root)
    except MusicTheoryError as e:
        _fail(e)

    mode = canonicalize(scale)
    chords = enumerate_chords(scale, system)

    click.echo(f"scale\t{format_tones(scale.tones)}\t{format_names(scale.tones)}")
    click.echo(f"mode\t{format_tones(mode.tones)}")
    click.echo(f"system\t{system}")
    click.echo(f"musicality\t{sum(1 for c in chords if c.size == 3)}")
    for chord in chords:
        marker = '' if chord.size == 4 or is_classical_pattern(chord.pattern) else '\t*'
        click.echo(
            f"chord\t{format_tones(chord.tones)}\t{format_names(chord.tones)}\t"
            f"{format_tones(chord.pattern)}{marker}"
        )


@cli.command()
@click.option('--mode', 'scale', type=SCALE, required=True, help="Gamme à dessiner.")
@click.option('--root', type=TONE, default=None, help="Pose le mode sur ce ton.")
@click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None,
              help="Fichier SVG (stdout si absent).")
@click.option('--no-cliques', is_flag=True, help="Ne remplit pas les triangles.")
@extended_option
def chart(scale, root, out, no_cliques, extended):
    """Diagramme circulaire des intervalles harmoniques (SVG)."""
    system = HarmonicSystem.from_flag(extended)
    try:
        scale = _scale_at(scale, root)
        document = render_svg(scale, system, ChartOptions(show_cliques=not no_cliques))
        if out is None:
            click.get_binary_stream('stdout').write(document)
            return
        with open(out, 'wb') as f:
            f.write(document)
    except (MusicTheoryError, OSError) as e:
        _fail(e)

    edges = harmonic_edges(scale, system)
    click.echo(f"{out}\t{len(edges)} edges\t{len(find_cliques(edges))} triangles")
    logger.info(f"Diagramme sauvegardé dans {out}")


@cli.command('compose')
@click.option('--mode', 'scale', type=SCALE, default=format_tones(MAJOR_MODE), show_default=True,
              help="Mode (canonisé).")
@click.option('--root', type=TONE, default='A', show_default=True, help="Ton de départ.")
@click.option('--base-pitch', type=int, default=None, help="Hauteur du degré 1 (défaut: le ton de départ).")
@click.option('--primes', 'prime_count', type=click.IntRange(min=0), default=None,
              help="Utilise les N premiers nombres premiers (défaut: 500).")
@click.option('--terms', default=None, help="Liste explicite: 2,3,5,7")
@click.option('--sequence-file', type=click.Path(dir_okay=False), default=None,
              help="Entiers positifs séparés par des espaces.")
@click.option('--count', type=click.IntRange(min=0), default=None, help="Termes lus dans --sequence-file.")
@click.option('--rhythm', default=','.join(DEFAULT_RHYTHM), show_default=True,
              help="Palette: noms (quarter,eighth,half...) ou ticks.")
@click.option('--ticks-per-quarter', type=click.IntRange(min=1), default=TICKS_PER_QUARTER, show_default=True)
@click.option('--tempo', type=click.IntRange(min=1), default=TEMPO, show_default=True,
              help="Microsecondes par noire.")
@click.option('--base-note', type=click.IntRange(0, 127), default=BASE_MIDI_NOTE, show_default=True,
              help="Note MIDI de la hauteur 1.")
@click.option('--out', type=click.Path(dir_okay=False), required=True, help="Fichier MIDI.")
@click.option('--score', type=click.Path(dir_okay=False), default=None, help="Partition texte.")
@extended_option
def compose_command(scale, root, base_pitch, prime_count, terms, sequence_file, count, rhythm,
                    ticks_per_quarter, tempo, base_note, out, score, extended):
    """Compose un duo à partir d'une suite d'entiers et l'écrit en MIDI."""
    chosen = [name for name, value in (
        ('--primes', prime_count), ('--terms', terms), ('--sequence-file', sequence_file)
    ) if value is not None]
    if len(chosen) > 1:
        raise click.UsageError(f"Options incompatibles: {' et '.join(chosen)}")
    if count is not None and sequence_file is None:
        raise click.UsageError("--count ne s'utilise qu'avec --sequence-file")

    try:
        if terms is not None:
            source = SequenceSource.from_values(int(t) for t in terms.replace(' ', '').split(',') if t)
        elif sequence_file is not None:
            source = SequenceSource.from_file(sequence_file, count)
        else:
            source = SequenceSource.of_primes(prime_count)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='--terms') from e

    try:
        cfg = ComposerConfig(
            mode=canonicalize(scale),
            root=root,
            base_pitch=base_pitch,
            system=HarmonicSystem.from_flag(extended),
            rhythm_palette=parse_rhythm_palette(rhythm, ticks_per_quarter)
        )
        midi_cfg = MidiConfig(ticks_per_quarter=ticks_per_quarter, tempo=tempo, base_note=base_note)

        duet = compose(source, cfg)
        for report in (validate_duet(duet), validate_midi_range(duet, midi_cfg)):
            if not report['valid']:
                raise MusicTheoryError("; ".join(report['errors']))

        save_midi(duet, out, midi_cfg)
        if score is not None:
            save_text_score(duet, score, midi_cfg)
    except (MusicTheoryError, OSError) as e:
        _fail(e)

    summary = get_duet_summary(duet)
    click.echo(
        f"{out}\t{summary['beats']} beats\t{summary['harmony_notes']} harmony notes\t"
        f"{summary['total_ticks']} ticks"
    )


def run(argv=None):
    """
    Exécute la CLI et renvoie le code de sortie

    0 succès, 1 validation ou entrée/sortie, 2 usage
    """
    try:
        return cli.main(args=argv, prog_name='music-by-numbers', standalone_mode=False) or 0
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Interrompu", err=True)
        return 1


if __name__ == '__main__':
    sys.exit(run())
