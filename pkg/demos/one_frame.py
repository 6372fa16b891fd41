"""One frame of the crossroad, end to end.

Builds random traffic, picks a user at a mid-episode frame, renders the four
camera views, triangulates the user from the views that see it, traces its
channel to every BS and prints the oracle BS and beam pair.

    python demos/one_frame.py [--seed N] [--ppm DIR]
"""
import argparse
from pathlib import Path

import numpy as np

from mvbeam.beams import best_bs_and_pair, dft_codebook, reference_snr
from mvbeam.camera import render_view, save_ppm, triangulate
from mvbeam.channel import channel_for
from mvbeam.config import Config
from mvbeam.dataset import intrinsics_from_config, layout_from_config
from mvbeam.world import area_of, random_traffic, step_scene


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--ppm", type=Path, default=None, help="write the four views as PPM images here")
    args = ap.parse_args()

    cfg = Config()
    s = cfg.scene
    layout = layout_from_config(cfg)
    intr = intrinsics_from_config(cfg)
    specs = random_traffic(layout, np.random.default_rng(args.seed), s.vehicles_per_episode, s.spawn_horizon, s.dt,
                           s.class_probs, min_headway=s.min_headway, clearance=s.clearance)
    frame = step_scene(layout, specs, 150, s.dt)
    print(f"frame 150: {len(frame.vehicles)} vehicles on the road")
    if not frame.vehicles:
        return
    user = frame.vehicles[0]
    print(f"user {user.id} ({user.cls.value}) at {np.round(user.antenna, 2)}, area {area_of(user.antenna, layout) + 1}")

    # cameras: render, then triangulate the antenna from every view that sees the user
    obs = []
    for b, pose in enumerate(layout.cameras):
        img, boxes, ids = render_view(pose, intr, frame)
        if args.ppm:
            args.ppm.mkdir(parents=True, exist_ok=True)
            save_ppm(args.ppm / f"view{b + 1}.ppm", img)
        seen = np.count_nonzero(ids == user.id)
        print(f"  camera {b + 1}: {len(boxes)} boxes, user covers {seen} px")
        if seen >= cfg.camera.min_visible_pixels:
            box = next(bx for bx in boxes if bx.vehicle_id == user.id)
            obs.append((pose, intr, box.center))
    if len(obs) >= 2:
        # box centres are not exact antenna projections, so expect a metre-scale error
        est = triangulate(obs).point
        print(f"  triangulated from {len(obs)} views: error {np.linalg.norm(est[:2] - user.antenna[:2]):.2f} m")

    # radio: paths and channel per BS, then the exhaustive oracle
    chans = []
    for b in range(4):
        H, paths = channel_for(frame, layout, b, user.id, cfg.channel)
        los = any(p.bounce_count == 0 for p in paths)
        chans.append(H)
        print(f"  BS {b + 1}: {len(paths)} paths, LOS {'yes' if los else 'blocked'}, |H|_F = {np.linalg.norm(chans[-1]):.3e}")
    ch = cfg.channel
    tx, rx = dft_codebook(ch.tx_geometry(), "tx"), dft_codebook(ch.rx_geometry(), "rx")
    lab = best_bs_and_pair(chans, tx, rx, reference_snr(cfg.dataset.label_snr_db, ch.wavelength))
    print(f"oracle: BS {lab.bs_index}, tx beam {lab.pair.tx}, rx beam {lab.pair.rx}, {lab.rate:.2f} bit/s/Hz")


if __name__ == "__main__":
    main()
