#!/usr/bin/env python3
"""
Main entry point for the laser speckle freeze-drying monitor.

Subcommands cover the whole pipeline: speckle simulation, texture feature
extraction, the published sample dataset, classifier training, prediction,
evaluation and the debounced monitoring loop.
"""

import argparse
import json
import logging
import math
import sys
from typing import Dict, Optional, Sequence

from src.classify import (EQUAL_FREQUENCY, EQUAL_WIDTH, build_default_ensemble, evaluate,
                          knn_train, leave_one_out, load_model, nb_train, predict_dataset,
                          save_model, split_holdout)
from src.errors import IlsiError
from src.features import (build_dataset, build_feature_vector, most_discriminant_attribute,
                          read_csv, table3_fixture, write_csv)
from src.imaging import load_image, parse_roi, save_image, suggest_rois
from src.models import Dataset, PhasorFieldConfig
from src.monitor import (class_midpoint, fit_polynomial_trend, locate_transition_from_trend,
                         open_stream, run_detection_loop, write_events_csv, write_stream_csv)
from src.speckle import simulate_speckle, speckle_contrast
from src.utils import DataGenerator, Logger, RunConfig, load_config

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

# option -> (config section, key)
CONFIG_KEYS = {
    'width': ('simulation', 'width'),
    'height': ('simulation', 'height'),
    'phasors': ('simulation', 'phasors'),
    'amplitude': ('simulation', 'amplitude'),
    'radius': ('simulation', 'radius'),
    'band_count': ('features', 'band_count'),
    'roi_size': ('features', 'roi_size'),
    'algo': ('classification', 'algo'),
    'bins': ('classification', 'bins'),
    'threshold': ('classification', 'threshold'),
    'alpha': ('classification', 'alpha'),
    'discretization': ('classification', 'discretization'),
    'k': ('classification', 'k'),
    'standardized': ('classification', 'standardized'),
    'positive': ('classification', 'positive'),
    'debounce': ('monitoring', 'debounce'),
    'cadence': ('monitoring', 'cadence'),
    'trend_degree': ('monitoring', 'trend_degree'),
    'trend_attribute': ('monitoring', 'trend_attribute'),
    'workers': ('monitoring', 'workers'),
}


class UsageError(Exception):
    """Command line could not be parsed."""


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage problems as exceptions."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _add_classifier_options(p: argparse.ArgumentParser) -> None:
    p.add_argument('--algo', choices=['nb', 'knn', 'ensemble'], default=None,
                   help='Classifier (default: knn)')
    p.add_argument('--bins', type=int, default=None,
                   help='Discretization bins for naive Bayes (default: 5)')
    p.add_argument('--threshold', type=float, default=None,
                   help='Normalized mutual information selection threshold t (default: 0.1)')
    p.add_argument('--alpha', type=float, default=None,
                   help='Laplace smoothing pseudo-count (default: 1.0)')
    p.add_argument('--discretization', choices=[EQUAL_FREQUENCY, EQUAL_WIDTH], default=None,
                   help=f'Discretization method (default: {EQUAL_FREQUENCY})')
    p.add_argument('--k', type=int, default=None, help='k-NN neighbour count (default: 1)')
    p.add_argument('--standardized', dest='standardized', action='store_const', const=True,
                   default=None, help='Standardize k-NN columns (default)')
    p.add_argument('--raw', dest='standardized', action='store_const', const=False,
                   help='Use unstandardized k-NN distances')


def build_parser() -> CliParser:
    parser = CliParser(
        prog='main.py',
        description='Laser speckle texture monitoring of freeze-drying',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Published sample dataset, then leave-one-out 1-NN
  python main.py fixture --out t3.csv
  python main.py evaluate --algo knn --k 1 --standardized --loo --in t3.csv

  # Train and monitor a synthetic stream
  python main.py train --algo knn --in t3.csv --out knn.json
  python main.py synth-stream --out stream.csv --seed 0
  python main.py monitor --model knn.json --frames stream.csv --events-out events.csv
        """
    )
    parser.add_argument('--config', type=str, default=None,
                        help='YAML configuration file (default: config/default_config.yaml)')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')
    parser.add_argument('--log-file', type=str, default=None, help='Also write logs to this file')

    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('simulate', help='Simulate a speckle image (random phasor sum)')
    p.add_argument('--width', type=int, default=None, help='Image width (default: 256)')
    p.add_argument('--height', type=int, default=None, help='Image height (default: 256)')
    p.add_argument('--phasors', type=int, default=None, help='Phasors per pixel N (default: 100)')
    p.add_argument('--amplitude', type=float, default=None, help='Phasor amplitude (default: 1.0)')
    p.add_argument('--radius', type=int, default=None,
                   help='Phase correlation radius in pixels, 0 = independent (default: 0)')
    p.add_argument('--seed', type=int, default=None, help='Random seed (default: 0)')
    p.add_argument('--out', type=str, required=True, help='Output PGM path')

    p = sub.add_parser('features', help='Texture features of one or more images')
    p.add_argument('--image', type=str, action='append', required=True,
                   help='Input PGM/PNG image (repeatable)')
    p.add_argument('--roi', type=parse_roi, action='append', default=None,
                   help="Sampling area 'x,y,w,h[:label]' (repeatable)")
    p.add_argument('--suggest', action='store_true',
                   help='Place sampling areas automatically on the first image')
    p.add_argument('--band-count', type=int, default=None,
                   help='Intensity bands for --suggest (default: 4)')
    p.add_argument('--roi-size', type=int, default=None,
                   help='Window side for --suggest (default: 50)')
    p.add_argument('--label', type=str, default='unlabelled', help='Class label for every row')
    p.add_argument('--out', type=str, default=None, help='Output dataset CSV')

    p = sub.add_parser('fixture', help='Write the published 20-row sample dataset')
    p.add_argument('--out', type=str, required=True, help='Output dataset CSV')

    p = sub.add_parser('synth-stream', help='Write the perturbed 20-frame sample stream')
    p.add_argument('--out', type=str, required=True, help='Output stream CSV')
    p.add_argument('--seed', type=int, default=None, help='Random seed (default: 0)')
    p.add_argument('--perturbation', type=float, default=0.02,
                   help='Relative per-attribute perturbation (default: 0.02)')
    p.add_argument('--cadence', type=float, default=None,
                   help='Seconds between frames (default: 72)')

    p = sub.add_parser('train', help='Train a classifier on a dataset CSV')
    p.add_argument('--in', dest='input', type=str, required=True, help='Training dataset CSV')
    p.add_argument('--out', type=str, required=True, help='Output model JSON')
    _add_classifier_options(p)

    p = sub.add_parser('predict', help='Classify the rows of a dataset CSV')
    p.add_argument('--model', type=str, required=True, help='Trained model JSON')
    p.add_argument('--in', dest='input', type=str, required=True, help='Dataset CSV')
    p.add_argument('--out', type=str, default=None, help='Output predictions CSV')

    p = sub.add_parser('evaluate', help='Confusion matrix, accuracy, sensitivity, specificity')
    p.add_argument('--in', dest='input', type=str, required=True, help='Labelled dataset CSV')
    p.add_argument('--model', type=str, default=None, help='Evaluate a saved model')
    mode = p.add_mutually_exclusive_group()
    mode.add_argument('--loo', action='store_true', help='Leave-one-out with --algo')
    mode.add_argument('--holdout', type=float, default=None,
                      help='Stratified training fraction with --algo (default: 0.5)')
    p.add_argument('--seed', type=int, default=None, help='Holdout split seed (default: 0)')
    p.add_argument('--positive', type=str, default=None,
                   help='Positive class (default: micro-collapse)')
    p.add_argument('--out', type=str, default=None, help='Output report JSON')
    _add_classifier_options(p)

    p = sub.add_parser('monitor', help='Run the debounced detection loop over a frame stream')
    p.add_argument('--model', type=str, required=True, help='Trained model JSON')
    p.add_argument('--frames', type=str, required=True,
                   help='Stream CSV of feature vectors, or a glob of PGM frames')
    p.add_argument('--roi', type=parse_roi, action='append', default=None,
                   help="Sampling area for image frames 'x,y,w,h[:label]' (repeatable)")
    p.add_argument('--debounce', type=int, default=None,
                   help='Agreeing frames needed to commit a state change (default: 3)')
    p.add_argument('--cadence', type=float, default=None,
                   help='Seconds between image frames (default: 72)')
    p.add_argument('--workers', type=int, default=None,
                   help='Threads measuring image frames (default: 1)')
    p.add_argument('--events-out', type=str, default=None, help='Output events CSV')
    p.add_argument('--train-data', type=str, default=None,
                   help='Labelled dataset CSV for the trend attribute and threshold')
    p.add_argument('--trend-attribute', type=str, default=None,
                   help='Attribute for the polynomial trend (default: most discriminant Levine)')
    p.add_argument('--trend-degree', type=int, default=None,
                   help='Polynomial trend degree (default: 6)')
    p.add_argument('--trend-threshold', type=float, default=None,
                   help='Trend crossing level (default: midpoint of the class means)')
    return parser


def resolve_options(args: argparse.Namespace, config: Dict) -> RunConfig:
    """Fill unset flags from the configuration and validate the result."""
    options = {key: value for key, value in vars(args).items()
               if key not in ('command', 'config', 'verbose', 'log_file', 'seed')}
    for key, (section, name) in CONFIG_KEYS.items():
        if key in options and options[key] is None:
            options[key] = config[section][name]
    if 'roi' in options and not options['roi']:
        options['roi'] = [parse_roi(spec) for spec in config['features']['rois']] or None
    if 'holdout' in options and options['holdout'] is None and not options.get('loo'):
        options['holdout'] = config['classification']['holdout']

    section = 'simulation' if args.command == 'simulate' else 'classification'
    seed = getattr(args, 'seed', None)
    run = RunConfig(command=args.command, options=options,
                    seed=config[section]['seed'] if seed is None else seed,
                    verbosity=1 if args.verbose else 0)
    run.validate()
    return run


def train_model(ds: Dataset, run: RunConfig):
    """Train the configured classifier."""
    algo = run.get('algo')
    if algo == 'nb':
        return nb_train(ds, b=run.get('bins'), t=run.get('threshold'),
                        alpha=run.get('alpha'), method=run.get('discretization'))
    if algo == 'knn':
        return knn_train(ds, k=run.get('k'), standardized=run.get('standardized'))
    return build_default_ensemble(ds, b=run.get('bins'), t=run.get('threshold'),
                                  method=run.get('discretization'))


def _format_metric(value: float) -> str:
    return 'n/a' if math.isnan(value) else f"{value:.4f}"


def cmd_simulate(run: RunConfig, logger: logging.Logger) -> int:
    cfg = PhasorFieldConfig(width=run.get('width'), height=run.get('height'),
                            n_phasors=run.get('phasors'), amplitude=run.get('amplitude'),
                            seed=run.seed, correlation_radius=run.get('radius'))
    image = simulate_speckle(cfg)
    save_image(image, run.get('out'))
    print(f"Simulated {cfg.width}x{cfg.height} speckle (N={cfg.n_phasors}, seed={cfg.seed}, "
          f"radius={cfg.correlation_radius})")
    print(f"  Speckle contrast: {speckle_contrast(image):.4f}")
    print(f"  Written: {run.get('out')}")
    return EXIT_OK


def cmd_features(run: RunConfig, logger: logging.Logger) -> int:
    images = [load_image(path) for path in run.get('image')]
    rois = run.get('roi') or []
    if run.get('suggest'):
        rois = suggest_rois(images[0], band_count=run.get('band_count'),
                            roi_size=run.get('roi_size'))
        print("Suggested sampling areas: " + (" ".join(r.to_spec() for r in rois) or "none"))
    if not rois:
        raise IlsiError("--roi: at least one sampling area is required (or use --suggest)")
    for path, image in zip(run.get('image'), images):
        vector = build_feature_vector(image, rois)
        print(f"{path}:")
        for name, value in zip(vector.attribute_names, vector.values):
            print(f"  {name}: {value:.4f}")
    if run.get('out'):
        ds = build_dataset(images, [run.get('label')] * len(images), rois)
        write_csv(ds, run.get('out'))
        print(f"Written: {run.get('out')}")
    return EXIT_OK


def cmd_fixture(run: RunConfig, logger: logging.Logger) -> int:
    ds = table3_fixture()
    write_csv(ds, run.get('out'))
    counts = ", ".join(f"{label}: {n}" for label, n in ds.class_counts().items())
    print(f"Sample dataset: {len(ds)} rows ({counts}), {len(ds.attribute_names)} attributes")
    print(f"  Written: {run.get('out')}")
    return EXIT_OK


def cmd_synth_stream(run: RunConfig, logger: logging.Logger) -> int:
    stream = DataGenerator.perturbed_fixture_stream(seed=run.seed,
                                                    perturbation=run.get('perturbation'),
                                                    cadence=run.get('cadence'))
    write_stream_csv(stream, run.get('out'))
    print(f"Synthetic stream: {len(stream)} frames (seed={run.seed})")
    print(f"  Written: {run.get('out')}")
    return EXIT_OK


def cmd_train(run: RunConfig, logger: logging.Logger) -> int:
    ds = read_csv(run.get('input'))
    model = train_model(ds, run)
    save_model(model, run.get('out'))
    print(f"Trained {model.kind} model on {len(ds)} rows, {len(model.classes)} classes")
    if model.kind == 'nb':
        print(f"  Selected attributes: {', '.join(model.selected_attributes)}")
    print(f"  Written: {run.get('out')}")
    return EXIT_OK


def cmd_predict(run: RunConfig, logger: logging.Logger) -> int:
    model = load_model(run.get('model'))
    ds = read_csv(run.get('input'))
    predictions = [model.predict(row) for row in ds.rows]
    lines = ["row,label,confidence"]
    for i, prediction in enumerate(predictions):
        print(f"  row {i}: {prediction.label} ({prediction.confidence:.2f})")
        lines.append(f"{i},{prediction.label},{prediction.confidence!r}")
    if run.get('out'):
        with open(run.get('out'), 'w', encoding='utf-8') as f:
            f.write("\n".join(lines) + "\n")
        print(f"Written: {run.get('out')}")
    return EXIT_OK


def cmd_evaluate(run: RunConfig, logger: logging.Logger) -> int:
    ds = read_csv(run.get('input'))
    if run.get('model'):
        model = load_model(run.get('model'))
        predictions, truth = predict_dataset(model, ds), list(ds.labels)
        mode = f"saved {model.kind} model"
    elif run.get('loo'):
        predictions = leave_one_out(ds, lambda train: train_model(train, run))
        truth = list(ds.labels)
        mode = f"leave-one-out {run.get('algo')}"
    else:
        train, test = split_holdout(ds, run.get('holdout'), run.seed)
        model = train_model(train, run)
        predictions, truth = predict_dataset(model, test), list(test.labels)
        mode = (f"holdout {run.get('algo')} ({len(train)} train / {len(test)} test, "
                f"seed={run.seed})")

    report = evaluate(predictions, truth, positive=run.get('positive'))
    print(f"Evaluation: {mode}")
    print(report.render())
    print(f"  accuracy={_format_metric(report.accuracy)} "
          f"sensitivity={_format_metric(report.sensitivity)} "
          f"specificity={_format_metric(report.specificity)}")
    if run.get('out'):
        document = report.to_dict()
        document['predictions'] = [str(p) for p in predictions]
        with open(run.get('out'), 'w', encoding='utf-8') as f:
            json.dump(document, f, indent=2, sort_keys=True, allow_nan=False)
            f.write("\n")
        print(f"Written: {run.get('out')}")
    return EXIT_OK


def cmd_monitor(run: RunConfig, logger: logging.Logger) -> int:
    model = load_model(run.get('model'))
    stream = open_stream(run.get('frames'), cadence=run.get('cadence'))
    result = run_detection_loop(stream, model, rois=run.get('roi'),
                                debounce=run.get('debounce'), workers=run.get('workers'))

    print(f"Monitored {result.frame_count} frames (debounce={run.get('debounce')})")
    print("  Labels: " + " ".join(str(label) for label in result.labels))
    if result.events:
        for event in result.events:
            print(f"  Event at frame {event.frame_index} (t={event.timestamp:.1f}s): "
                  f"{event.from_state} -> {event.to_state} "
                  f"(confidence {event.confidence:.2f})")
    else:
        print("  No state change detected")

    train_ds = read_csv(run.get('train_data')) if run.get('train_data') else None
    attribute = run.get('trend_attribute')
    if attribute is None and train_ds is not None:
        attribute = most_discriminant_attribute(train_ds, measure='Levine')
    if attribute is not None:
        result.trend = fit_polynomial_trend(result.series(attribute), run.get('trend_degree'),
                                            attribute_name=attribute)
        threshold = run.get('trend_threshold')
        if threshold is None and train_ds is not None:
            threshold = class_midpoint(train_ds, attribute)
        print(f"  Trend: degree {result.trend.degree} over {attribute}, "
              f"residual rms {result.trend.residual_rms:.4g}")
        if threshold is not None:
            crossing = locate_transition_from_trend(result.trend, threshold)
            if crossing is None:
                print(f"  Trend never falls through {threshold:.4g}")
            else:
                print(f"  Trend falls through {threshold:.4g} at t={crossing:.1f}s")

    if run.get('events_out'):
        write_events_csv(result.events, run.get('events_out'))
        print(f"  Written: {run.get('events_out')}")
    return EXIT_OK


COMMANDS = {
    'simulate': cmd_simulate,
    'features': cmd_features,
    'fixture': cmd_fixture,
    'synth-stream': cmd_synth_stream,
    'train': cmd_train,
    'predict': cmd_predict,
    'evaluate': cmd_evaluate,
    'monitor': cmd_monitor,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success, 1 on usage errors (including out-of-range flag values),
        2 on data or format errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr, end='')
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = load_config(args.config)
        level = 'DEBUG' if args.verbose else config['logging']['level']
        logger = Logger.setup_logger(level=level,
                                     log_file=args.log_file or config['logging']['log_file'],
                                     stream=sys.stderr)
        try:
            run = resolve_options(args, config)
        except ValueError as exc:
            print(f"{parser.prog}: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        Logger.log_run_start(logger, {'command': run.command, 'seed': run.seed})
        code = COMMANDS[run.command](run, logger)
        Logger.log_run_end(logger, {'exit_code': code})
        return code
    except (IlsiError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
