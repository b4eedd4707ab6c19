"""Directional ablation probe at reduced desk scale."""
import sys, time, json, torch
import numpy as np
from vqvcl.core import ModelConfig
from vqvcl.datagen import SweepSpec, build_dataset
from vqvcl.harness import train, evaluate
torch.set_num_threads(1)

seeds = [int(s) for s in (sys.argv[1].split(",") if len(sys.argv) > 1 else ["0"])]
epochs = int(sys.argv[2]) if len(sys.argv) > 2 else 24

spec = SweepSpec(n_classes=5, clip_len=60, frame_size=64, boundary_jitter=3, seed=0)
ds = build_dataset(spec, n_train=10, n_test=6, queries_per_class=6)
base = ModelConfig(T=60, epochs=epochs, sched_period=max(epochs - 2, 1),
                   warmup_epochs=2, lr=5e-4, pairs_per_video=3)

cells = {
    "full":       {},
    "k1":         {"K": 1},
    "ce":         {"loss_mode": "ce"},
    "url":        {"loss_mode": "url"},
    "sequential": {"fusion_mode": "sequential"},
    "concat_sa":  {"fusion_mode": "concat_sa"},
}
results = {}
for label, over in cells.items():
    per_seed = []
    for seed in seeds:
        cfg = base.replace(seed=seed, **over)
        t0 = time.time()
        state = train(cfg, ds, out_dir=None, quiet=True)
        summary, _ = evaluate(state.model, ds, split="test")
        per_seed.append(summary["mtIoU"])
        print(f"{label} seed {seed}: mtIoU {summary['mtIoU']:.4f} acc {summary.get('class_acc'):.2f} ({time.time()-t0:.0f}s)", flush=True)
    results[label] = per_seed

means = {k: float(np.mean(v)) for k, v in results.items()}
print(json.dumps({"means": means, "per_seed": results}, indent=1))
print("margins: k3-k1 %.4f | url-ce %.4f | mtda-url %.4f | par-seq %.4f | cross-concat %.4f" % (
    means["full"] - means["k1"], means["url"] - means["ce"], means["full"] - means["url"],
    means["full"] - means["sequential"], means["full"] - means["concat_sa"]))
