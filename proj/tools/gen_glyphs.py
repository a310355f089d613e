#!/usr/bin/env python3
# Copyright 2026 The MontiWeb Tools Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Rasterizes printable ASCII into the bitmap font used for image fields.

Usage: gen_glyphs.py FONT.ttf > src/codegen/glyphs.inc
"""

import sys

from PIL import Image, ImageDraw, ImageFont

WIDTH = 6
HEIGHT = 10
SIZE = 10
THRESHOLD = 110


def rasterize(font, ch):
    img = Image.new("L", (WIDTH, HEIGHT), 0)
    ImageDraw.Draw(img).text((0, -1), ch, fill=255, font=font)
    rows = []
    for y in range(HEIGHT):
        bits = 0
        for x in range(WIDTH):
            if img.getpixel((x, y)) >= THRESHOLD:
                bits |= 1 << (WIDTH - 1 - x)
        rows.append(bits)
    return rows


def main():
    font = ImageFont.truetype(sys.argv[1], SIZE)
    with open(__file__) as self_file:
        for line in self_file.read().splitlines()[1:14]:
            print("//" + line[1:])
    print()
    print("// Generated by tools/gen_glyphs.py. Do not edit.")
    print(f"constexpr int kGlyphWidth = {WIDTH};")
    print(f"constexpr int kGlyphHeight = {HEIGHT};")
    print(f"constexpr unsigned char kGlyphs[95][{HEIGHT}] = {{")
    for code in range(32, 127):
        rows = rasterize(font, chr(code))
        body = ", ".join(f"0x{r:02x}" for r in rows)
        print(f"    {{{body}}},  // {code}")
    print("};")


if __name__ == "__main__":
    main()
