"""Train the localizer on a small benchmark and inspect its predictions.

A few minutes on one CPU core. For the full benchmark configuration used by
the acceptance suite (40 train videos, 60 epochs), see tests/test_acceptance.py
or run the CLI: vqvcl gen-data / vqvcl train / vqvcl eval.
"""

from pathlib import Path

import torch

from vqvcl import ModelConfig, SweepSpec, build_dataset, evaluate, train
from vqvcl.harness import eval_window
from vqvcl.metrics import format_report
from vqvcl.plots import plot_prediction_timeline, plot_training_curves

torch.set_num_threads(1)
out = Path("runs/demo_training")

spec = SweepSpec(n_classes=5, clip_len=60, frame_size=64, boundary_jitter=2, seed=0)
dataset = build_dataset(spec, n_train=8, n_test=3, queries_per_class=6)

cfg = ModelConfig(T=60, epochs=16, sched_period=8, warmup_epochs=2,
                  pairs_per_video=3, seed=0)
state = train(cfg, dataset, out_dir=out, quiet=False)
plot_training_curves(state.history, out / "training_curves.png")

summary, records = evaluate(state.model, dataset, split="test", out_dir=out)
print()
print(format_report(summary, title="test split"))

sample = dataset.split("test")[0]
clip, gt = eval_window(dataset.videos[sample.video_ref], sample.gt_span, cfg.T)
pred, pred_class, _ = state.model.localize(clip, dataset.queries[sample.query_ref])
print(f"\n{sample.video_ref} class {sample.class_id}: "
      f"predicted ({pred.start}, {pred.end}) vs labeled ({gt.start}, {gt.end}), "
      f"predicted class {pred_class}")
plot_prediction_timeline(cfg.T, gt, {"localizer": pred},
                         out / "prediction_timeline.png",
                         title=f"{sample.video_ref} class {sample.class_id}")
print(f"artifacts in {out}")
