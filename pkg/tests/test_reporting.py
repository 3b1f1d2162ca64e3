import pandas as pd

from harmony import STANDARD, Chord, enumerate_chords, musicality_landscape, rank_modes
from reporting import (
    chord_frame, duet_frame, get_duet_summary, get_ranking_summary, get_top_modes, ranking_frame
)


def test_ranking_frame():
    reports = rank_modes(7)
    df = ranking_frame(reports)

    assert list(df.columns) == ['rank', 'mode', 'names', 'k', 'musicality']
    assert len(df) == 462
    assert df['rank'].tolist() == list(range(1, 463))
    assert df['musicality'].is_monotonic_decreasing
    assert (df['k'] == 7).all()
    assert df.loc[0, 'mode'] == str(reports[0].mode)


def test_ranking_summary():
    reports = rank_modes(7)
    summary = get_ranking_summary(reports)
    best, count = musicality_landscape()[7]

    assert summary['total_modes'] == 462
    assert summary['max_musicality'] == best
    assert summary['modes_at_max'] == count
    assert sum(summary['distribution'].values()) == 462
    assert summary['min_musicality'] <= summary['avg_musicality'] <= summary['max_musicality']


def test_top_modes():
    reports = rank_modes(5)
    assert get_top_modes(reports, 3) == reports[:3]


def test_chord_frame(minor_mode):
    df = chord_frame(enumerate_chords(minor_mode.canonical, STANDARD))
    assert len(df) == 6
    assert df.loc[0, 'tones'] == '1,4,8'
    assert df.loc[0, 'names'] == 'A,C,E'
    assert df.loc[0, 'pattern'] == '3,4'
    assert df['classical'].all()


def test_chord_frame_flags_non_classical_patterns():
    df = chord_frame([Chord((1, 5, 10)), Chord((1, 5, 9))])
    assert df['classical'].tolist() == [False, True]


def test_chord_frame_empty():
    df = chord_frame([])
    assert df.empty
    assert list(df.columns) == ['tones', 'names', 'pattern', 'size', 'classical']


def test_duet_frame(prime_duet):
    df = duet_frame(prime_duet(9))
    assert len(df) == 9
    assert df['onset'].tolist() == [480 * i for i in range(9)]
    assert df.loc[0, 'melody_label'] == 'B3'
    assert df.loc[0, 'melody_midi'] == 59
    assert pd.isna(df.loc[0, 'harmony_midi'])
    assert df.loc[1, 'harmony_label'] == 'G#3'


def test_duet_summary(prime_duet):
    summary = get_duet_summary(prime_duet(9))
    assert summary == {
        'beats': 9,
        'melody_notes': 9,
        'melody_rests': 0,
        'harmony_notes': 5,
        'harmony_rests': 4,
        'harmony_ratio': 0.556,
        'total_ticks': 4320,
        'lowest_pitch': -4,
        'highest_pitch': 12
    }
