"""Plots cycle set tables and ideal lattices."""
from __future__ import annotations
from braces import IdealLattice, all_ideals
from catalog import get_entry
from cycle_sets import CycleSet, permutation_group
from permutation_braces import gbrace
from permutations import orbits
from text_formats import parse_cycle_set
from matplotlib.figure import Figure
import matplotlib.pyplot as plt
import matplotlib.patches as patches
import argparse

ORBIT_COLORS = ["y", "c", "g", "w", "r", "maroon", "orange", "violet"]


def _hide_axes(ax: plt.Axes) -> None:
    ax.set_yticklabels([])
    ax.set_xticklabels([])
    ax.set_xticks([])
    ax.set_yticks([])
    ax.spines['top'].set_visible(False)
    ax.spines['right'].set_visible(False)
    ax.spines['bottom'].set_visible(False)
    ax.spines['left'].set_visible(False)


def plot_cycle_set_table(cycle_set: CycleSet, show: bool = True) -> Figure:
    """
    Plot the table x·y of a cycle set, every cell coloured by the 𝒢(X)-orbit of its entry.

    :param cycle_set: The cycle set.
    :param show: Whether to show the plot.
    :return: The figure.
    """
    size = cycle_set.size
    point_orbits = orbits(permutation_group(cycle_set).generators, range(size))
    orbit_of = {point: index for index, orbit in enumerate(point_orbits) for point in orbit}

    fig, ax = plt.subplots(dpi=200)
    fig.patch.set_visible(False)
    fig.set_size_inches(max(4.0, 0.35 * size + 1), max(3.2, 0.3 * size + 1))
    _hide_axes(ax)

    cells = [[str(product + 1) for product in row] for row in cycle_set.table()]
    colors = [[ORBIT_COLORS[orbit_of[product] % len(ORBIT_COLORS)] for product in row] for row in cycle_set.table()]
    labels = [str(point + 1) for point in range(size)]
    table = ax.table(cellText=cells, cellColours=colors, colLabels=labels, rowLabels=labels, loc='center',
                     cellLoc='center')
    table.scale(1, 1.1)

    ax.set_title("x·y")
    ax.set_xlabel("y")
    ax.set_ylabel("x")
    ax.xaxis.tick_top()

    if len(point_orbits) > 1:
        shown = point_orbits[:len(ORBIT_COLORS)]
        handles = [patches.Rectangle((0, 0), .1, .1, facecolor=ORBIT_COLORS[index], edgecolor='k', lw=.6)
                   for index in range(len(shown))]
        ax.legend(handles, [f"Orbit of {orbit[0] + 1}" for orbit in shown], fontsize="xx-small",
                  bbox_to_anchor=(0.5, -0.14), ncol=min(len(shown), 4), loc=8)

    plt.tight_layout()
    if show:
        plt.show()
    return fig


def plot_ideal_lattice(lattice: IdealLattice, show: bool = True) -> Figure:
    """
    Draw the Hasse diagram of the ideals of a brace, labelled by size. Minimal non-zero ideals are red.

    :param lattice: The ideals.
    :param show: Whether to show the plot.
    :return: The figure.
    """
    levels = sorted({len(ideal) for ideal in lattice.ideals})
    by_level = {size: [ideal for ideal in lattice.ideals if len(ideal) == size] for size in levels}
    position = {}
    for height, size in enumerate(levels):
        row = by_level[size]
        for index, ideal in enumerate(row):
            position[ideal] = (index - (len(row) - 1) / 2, height)

    fig, ax = plt.subplots(dpi=200)
    fig.patch.set_visible(False)
    fig.set_size_inches(4, max(2.0, 1.2 * len(levels)))
    _hide_axes(ax)

    for lower in lattice.ideals:
        for upper in lattice.ideals:
            covers = lower < upper and not any(lower < middle < upper for middle in lattice.ideals)
            if covers:
                (x1, y1), (x2, y2) = position[lower], position[upper]
                ax.plot([x1, x2], [y1, y2], color='k', lw=.8, zorder=1)
    for ideal, (x, y) in position.items():
        color = "r" if ideal in lattice.minimal else "w"
        ax.scatter([x], [y], s=500, facecolor=color, edgecolor='k', zorder=2)
        ax.annotate(str(len(ideal)), (x, y), ha='center', va='center', fontsize="small", zorder=3)

    width = max(len(row) for row in by_level.values())
    ax.set_xlim(-width / 2 - .5, width / 2 + .5)
    ax.set_ylim(-.5, len(levels) - .5)
    ax.set_title("Ideals")
    plt.tight_layout()
    if show:
        plt.show()
    return fig


if __name__ == "__main__":
    parser = argparse.ArgumentParser(prog='Plot Structures',
                                     description='Plot the table of a cycle set and the ideals of its brace.')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("-f", "--filename", help='A cycle set file. (format: "n <size>" then "sigma x := (1,2)...")')
    source.add_argument("-c", "--catalog", help='The id of a bundled cycle set. (examples: P4 or C_5)')
    args = parser.parse_args()

    if args.filename:
        with open(args.filename, encoding="utf-8") as cycle_set_file:
            plotted = parse_cycle_set(cycle_set_file.read())
    else:
        plotted = get_entry(args.catalog).cycle_set

    plot_cycle_set_table(plotted, False)
    plot_ideal_lattice(all_ideals(gbrace(plotted).brace), False)
    plt.show()
