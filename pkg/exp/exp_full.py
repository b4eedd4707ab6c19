"""Full default benchmark probe: criterion-6 scale, best-checkpoint eval."""
import time, torch, json, sys
from vqvcl.core import ModelConfig
from vqvcl.datagen import SweepSpec, build_dataset
from vqvcl.harness import train, evaluate, load_checkpoint
torch.set_num_threads(1)

head = int(sys.argv[1]) if len(sys.argv) > 1 else 256
spec = SweepSpec(seed=0)
t0 = time.time()
ds = build_dataset(spec, n_train=40, n_test=10, queries_per_class=10)
cfg = ModelConfig(seed=0, head_hidden=head)
state = train(cfg, ds, out_dir="exp/full_run", quiet=True)
best_model, meta, _ = load_checkpoint("exp/full_run/best.npz")
summary_best, _ = evaluate(best_model, ds, split="test")
summary_last, _ = evaluate(state.model, ds, split="test")
print(json.dumps({
    "total_s": round(time.time()-t0),
    "best_epoch": meta["epoch"], "best_val": round(meta["best_val_mtiou"], 4),
    "val_curve": [(h["epoch"], round(h.get("val_mtiou", -1), 3)) for h in state.history if "val_mtiou" in h],
    "test_best": {k: round(v, 4) if isinstance(v, float) else v for k, v in summary_best.items()},
    "test_last": {k: round(v, 4) if isinstance(v, float) else v for k, v in summary_last.items()},
}, indent=1))
