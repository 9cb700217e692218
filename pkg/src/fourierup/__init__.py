"""Fourier-domain 2x up-sampling: periodic padding, area interpolation and
corner interpolation of amplitude/phase spectra, with checkers for the
identities they rely on."""

from .pipelines import (
    ChannelMixer,
    PipelineResult,
    UpsampleConfig,
    combine_with_spatial,
    fourierup_area,
    fourierup_corner,
    fourierup_padding,
    mixer_apply,
    mixer_gradient,
    run_pipeline,
    spatial_upsample2x,
)
from .polar import PolarGrid, from_polar, to_polar
from .rules import (
    a_factor,
    area_interpolate2x,
    bilinear_resize,
    corner_crop_merge_resize,
    corner_interpolate2x,
    periodic_pad2x,
)
from .spectral import (
    checkerboard_modulate,
    dft2_oracle,
    fft2,
    fftshift2,
    idft2_oracle,
    ifft2,
    zero_insert2x,
)
from .verification import (
    VerificationReport,
    verify_gradient,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
)

__version__ = "0.1.0"
