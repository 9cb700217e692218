"""Regenerate the bundled test images from scikit-image's public-domain astronaut photo."""

from pathlib import Path

import numpy as np
from skimage import color, data, transform

from fourierup.netpbm import RasterImage, save_pnm

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def main():
    rgb = data.astronaut()[40:296, 120:376]  # 256x256 face crop
    small = transform.resize(rgb, (64, 64), anti_aliasing=True)
    rgb8 = np.rint(small * 255).astype(np.uint8)
    gray8 = np.rint(color.rgb2gray(small) * 255).astype(np.uint8)
    OUT.mkdir(parents=True, exist_ok=True)
    save_pnm(OUT / "astronaut64.ppm", RasterImage(rgb8))
    save_pnm(OUT / "astronaut64.pgm", RasterImage(gray8))


if __name__ == "__main__":
    main()
