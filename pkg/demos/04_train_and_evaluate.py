"""Train a narrow residual CNN on a small dataset and compare it with the periodogram.

This is a quick walk through the full pipeline; the network is far smaller and
the dataset far shorter than the desk-scale run (configs/desk.cfg), so the CNN
numbers here say nothing about its final quality.

    python demos/04_train_and_evaluate.py
"""

import tempfile
from pathlib import Path

import numpy as np

from rdnet.dataset import DatasetParams, generate_records, load_split, write_dataset
from rdnet.metrics import evaluate
from rdnet.model import BlockSpec, ModelConfig, TrainConfig, build_model, train
from rdnet.periodogram import PeriodogramEstimator

tmp = Path(tempfile.mkdtemp(prefix="rdnet-train-"))
params = DatasetParams(clean_count=120, snr_levels=(0.0, 15.0, 30.0))
write_dataset(tmp / "train.rdds", generate_records(params, 0, range(100)))
write_dataset(tmp / "val.rdds", generate_records(params, 0, range(100, 110)))
write_dataset(tmp / "test.rdds", generate_records(params, 0, range(110, 120)))
tr, va, te = (load_split(tmp / f"{s}.rdds") for s in ("train", "val", "test"))
print(f"train {len(tr)}  val {len(va)}  test {len(te)}")

cfg = ModelConfig(stem_width=8, blocks=(BlockSpec(1, 3, 8), BlockSpec(1, 3, 8), BlockSpec(1, 3, 4)))
model = build_model(cfg)
print(f"model parameters: {model.num_parameters():,}")
res = train(model, tr, va, TrainConfig(lr=1e-3, batch_size=16, epochs=20, patience=20),
            on_epoch=lambda s: print(f"  epoch {s.epoch:2d}  train {s.train_loss:10.1f}  val {s.val_loss:10.1f}"))
print(f"best epoch {res.best_epoch}, {res.total_seconds:.1f} s")

rows = {name: evaluate(est, te) for name, est in (("periodogram", PeriodogramEstimator()), ("cnn", model))}
print(f"\n{'SNR':>6} {'estimator':>12} {'rmse_k':>8} {'rmse_l':>8} {'PSNR':>8}")
for i, snr in enumerate(sorted(set(te.snr_db))):
    for name, r in rows.items():
        row = r[i]
        print(f"{snr:6.1f} {name:>12} {row.rmse_range_index:8.3f} {row.rmse_velocity_index:8.3f} {row.psnr_db:8.2f}")
print(f"\nmean test PSNR gap (cnn - periodogram): "
      f"{np.mean([c.psnr_db - p.psnr_db for c, p in zip(rows['cnn'], rows['periodogram'])]):+.2f} dB")
