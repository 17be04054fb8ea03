#!/usr/bin/env python3
"""Regenerate the 256x256 grayscale PGM test corpus from scikit-image's bundled samples."""

import argparse
import pathlib

import numpy as np
from skimage import color, data, transform

SOURCES = {
    "astronaut": data.astronaut,
    "cameraman": data.camera,
    "chelsea": data.chelsea,
    "coffee": data.coffee,
    "moon": data.moon,
}


def to_gray_square(img, size=256):
    if img.ndim == 3:
        img = color.rgb2gray(img) * 255.0
    img = np.asarray(img, dtype=np.float64)
    h, w = img.shape
    side = min(h, w)
    top, left = (h - side) // 2, (w - side) // 2
    img = img[top:top + side, left:left + side]
    img = transform.resize(img, (size, size), order=1, anti_aliasing=True,
                           preserve_range=True)
    return np.clip(np.floor(img + 0.5), 0, 255).astype(np.uint8)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=pathlib.Path)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, loader in SOURCES.items():
        img = to_gray_square(loader())
        h, w = img.shape
        with open(args.outdir / f"{name}.pgm", "wb") as f:
            f.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
            f.write(img.tobytes())
        print(f"{name}: {w}x{h}")


if __name__ == "__main__":
    main()
