"""Probe: ppv3 + head_hidden 256 at 10-video scale, new slack."""
import sys, time, torch, json
from vqvcl.core import ModelConfig
from vqvcl.datagen import SweepSpec, build_dataset
from vqvcl.harness import train, evaluate
torch.set_num_threads(1)

head = int(sys.argv[1]) if len(sys.argv) > 1 else 256
dm = int(sys.argv[2]) if len(sys.argv) > 2 else 64
spec = SweepSpec(seed=0)
ds = build_dataset(spec, n_train=10, n_test=5, queries_per_class=10)
cfg = ModelConfig(seed=0, epochs=40, sched_period=20, pairs_per_video=3,
                  head_hidden=head, d_model=dm)
t0 = time.time()
state = train(cfg, ds, out_dir=None, quiet=True)
summary, _ = evaluate(state.model, ds, split="test")
print(json.dumps({"head": head, "d_model": dm, "train_s": round(time.time()-t0),
                  "val_tail": [round(h.get("val_mtiou", -1), 3) for h in state.history if "val_mtiou" in h],
                  "test": {k: round(v, 4) if isinstance(v, float) else v for k, v in summary.items()}}))
