"""Run one ablation plan end to end: token design (class-specific vs generic).

Each cell trains on identical data with identical sample orderings, so the
comparison is paired. Swap in any registered plan name: tiers, losses, fusion,
attention, tokens, tier-embedding.
"""

import torch

from vqvcl import ModelConfig, SweepSpec, build_dataset, run_ablation
from vqvcl.harness import ABLATION_PLANS, format_ablation

torch.set_num_threads(1)

spec = SweepSpec(n_classes=5, clip_len=60, frame_size=64, boundary_jitter=2, seed=0)
dataset = build_dataset(spec, n_train=6, n_test=3, queries_per_class=4)
cfg = ModelConfig(T=60, epochs=10, sched_period=5, warmup_epochs=2,
                  pairs_per_video=2)

result = run_ablation(ABLATION_PLANS["tokens"], cfg, dataset, seeds=(0,),
                      out_dir="runs/demo_ablation")
print(format_ablation(result))
print("\nnote the temporal token budget: the class-specific path condenses the"
      "\nclip into N+1 tokens instead of one token per frame.")
