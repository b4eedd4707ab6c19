"""Small-scale generalization probe."""
import time, torch, json, sys
from vqvcl.core import ModelConfig
from vqvcl.datagen import SweepSpec, build_dataset
from vqvcl.harness import train, evaluate
torch.set_num_threads(1)

lr = float(sys.argv[1]) if len(sys.argv) > 1 else 1e-3
ppv = int(sys.argv[2]) if len(sys.argv) > 2 else 3
epochs = int(sys.argv[3]) if len(sys.argv) > 3 else 30

spec = SweepSpec(seed=0)
ds = build_dataset(spec, n_train=10, n_test=3, queries_per_class=6)
cfg = ModelConfig(seed=0, epochs=epochs, sched_period=max(epochs // 2, 1), lr=lr, pairs_per_video=ppv)
t0 = time.time()
state = train(cfg, ds, out_dir=None, quiet=True)
t_train = time.time() - t0
summary, _ = evaluate(state.model, ds, split="test")
hist = [{k: round(v, 3) for k, v in h.items() if k in ("epoch", "url", "cls", "mtda", "val_mtiou")} for h in state.history]
print(json.dumps({"lr": lr, "ppv": ppv, "train_s": round(t_train, 1),
                  "hist": hist[::5] + hist[-1:], "test": {k: round(v, 4) if isinstance(v, float) else v for k, v in summary.items()}}, indent=1))
