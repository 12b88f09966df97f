#!/usr/bin/env python3
"""Regenerates the map corpus (text grids, '#' occupied / '.' free).

Two environments at 0.1 m resolution:
  maze.txt     20 x 20 m solid block with 2 m corridors carved out: a long
               bottom corridor, two staircase branches and three dead-end
               docking pockets
  parking.txt  12 x 8.4 m lot: a lane above a row of deep parking slots

Run from the repository root:  python3 maps/generate_maps.py
"""

import os

RES = 0.1


class GridMap:
    def __init__(self, width_m, height_m, solid=False):
        self.w = round(width_m / RES)
        self.h = round(height_m / RES)
        self.occ = [[solid] * self.w for _ in range(self.h)]

    def fill_rect(self, x0, y0, x1, y1, occupied=True):
        """Marks cells whose center lies inside [x0,x1] x [y0,y1]."""
        for iy in range(self.h):
            cy = (iy + 0.5) * RES
            if not (y0 <= cy <= y1):
                continue
            for ix in range(self.w):
                cx = (ix + 0.5) * RES
                if x0 <= cx <= x1:
                    self.occ[iy][ix] = occupied

    def carve(self, x0, y0, x1, y1):
        self.fill_rect(x0, y0, x1, y1, occupied=False)

    def border(self, t):
        self.fill_rect(0, 0, self.w * RES, t)
        self.fill_rect(0, self.h * RES - t, self.w * RES, self.h * RES)
        self.fill_rect(0, 0, t, self.h * RES)
        self.fill_rect(self.w * RES - t, 0, self.w * RES, self.h * RES)

    def write(self, path):
        lines = ["resolution %.6f origin %.6f %.6f" % (RES, 0.0, 0.0)]
        for iy in range(self.h - 1, -1, -1):  # top row = highest y
            lines.append("".join("#" if c else "." for c in self.occ[iy]))
        with open(path, "w", newline="\n") as f:
            f.write("\n".join(lines) + "\n")


def make_maze():
    m = GridMap(20.0, 20.0, solid=True)
    # all corridors are 2.0 m wide
    m.carve(0.2, 0.2, 19.8, 2.2)     # bottom corridor
    m.carve(4.0, 0.2, 6.0, 8.6)      # staircase riser 1
    m.carve(4.0, 6.6, 19.8, 8.6)     # middle corridor
    m.carve(11.0, 6.6, 13.0, 15.0)   # staircase riser 2
    m.carve(11.0, 13.0, 18.5, 15.0)  # top corridor
    m.carve(14.3, 0.2, 16.3, 8.6)    # east riser
    # docking pockets: 1.4 m wide, 2.2 m deep dead ends
    m.carve(12.4, 2.2, 13.8, 4.4)    # off the bottom corridor
    m.carve(17.0, 8.6, 18.4, 10.8)   # off the middle corridor
    m.carve(16.0, 15.0, 17.4, 17.2)  # off the top corridor
    return m


def make_parking():
    m = GridMap(12.0, 8.4)
    m.border(0.2)
    # deep slots 1.4 m wide x 2.5 m tall below the lane (lane y in [4.0,8.2]);
    # the slots defeat one-shot curve entries, forcing real maneuvering
    m.fill_rect(0.2, 1.3, 11.8, 1.5)  # slot floor
    for k in range(7):
        x = 0.6 + 1.6 * k
        m.fill_rect(x, 1.3, x + 0.2, 4.0)  # separators at x, slots between
    m.fill_rect(0.2, 1.3, 0.6, 4.0)    # seal left of slot 0
    m.fill_rect(10.4, 1.3, 11.8, 4.0)  # seal right of slot 5
    return m


def main():
    out_dir = os.path.dirname(os.path.abspath(__file__))
    make_maze().write(os.path.join(out_dir, "maze.txt"))
    make_parking().write(os.path.join(out_dir, "parking.txt"))
    print("wrote maze.txt and parking.txt")


if __name__ == "__main__":
    main()
