"""Generate the synthetic sweep benchmark and look at what it contains.

A sweep video drifts smoothly through N class regimes; every video carries
class spans (with optional annotation jitter), and exemplar query images come
from held-out renderings so no query pixel ever appears in a video.
"""

from vqvcl import PRESETS, SweepSpec, build_dataset, seeded_rng
from vqvcl.datagen import generate_sweep, write_manifest

spec = SweepSpec(n_classes=5, clip_len=150, frame_size=64, boundary_jitter=2, seed=0)

video, spans = generate_sweep(spec, seeded_rng(0))
print(f"one sweep: {video.num_frames} frames of {video.frame_size}x{video.frame_size}")
print("noise-free class spans (inclusive):")
for class_id, span in spans:
    print(f"  class{class_id}: frames {span.start:3d}..{span.end:3d} ({len(span)} frames)")

dataset = build_dataset(spec, n_train=4, n_test=2, queries_per_class=3)
print(f"\ndataset: {len(dataset.videos)} videos, {len(dataset.queries)} queries, "
      f"{len(dataset.samples)} (video, query, span) samples")
print(f"query bank classes: {sorted(dataset.query_bank)}")

first = dataset.split("train")[0]
print(f"\nfirst train sample: video={first.video_ref} query={first.query_ref} "
      f"class={first.class_id} span=({first.gt_span.start}, {first.gt_span.end})")

out = write_manifest(dataset, "runs/demo_dataset")
print(f"\npersisted to {out} (binary frame containers + JSON manifest)")
