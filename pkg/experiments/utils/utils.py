from datetime import datetime
import os
import csv
import matplotlib.pyplot as plt


current_dir = os.path.dirname(__file__)


def now():
    return datetime.now().strftime("%Y%m%dT%H%M%S")


class Logger:
    """
    Appends one CSV row per alpha-scan trial to results/<log>.csv, writing
    the header when the file is new.
    """

    def __init__(self, args):
        self.now = now()
        self.args = args
        os.makedirs(f"{current_dir}/../results", exist_ok=True)
        self.filename = f"{current_dir}/../results/{args.log}.csv"

    def log(self, p, t, row):
        with open(self.filename, "a", newline="") as csvfile:
            record = {
                "timestamp": self.now,
                "experiment": self.args.log,
                "n": self.args.n,
                "p": p,
                "m": row["m"],
                "C": str(self.args.C),
                "t": t,
                "guaranteed": f"{1 / t:.4f}",
                "trial": row["trial"],
                "seed": row["seed"],
                "method": row["method"],
                "size": row["size"],
                "exponent": row["exponent"],
            }
            writer = csv.DictWriter(csvfile, fieldnames=record.keys())
            if csvfile.tell() == 0:
                writer.writeheader()
            writer.writerow(record)


COLORS = ["orange",
          "#4e79a7",
          "#59a14f",
          "#9c755f",
          "#666666",
          "#e15759",
          "#b07aa1",
          "#BEAD53",
          "grey"]


def format_plt(ax, title, xlabel, ylabel):
    plt.sca(ax)
    plt.box(False)
    plt.tick_params(color="#222222", labelcolor="#222222")
    plt.xlabel(xlabel)
    plt.ylabel(ylabel)
    plt.gca().yaxis.grid(True, linestyle='-', which='major', color='lightgrey',
               alpha=0.5)
    if title is not None:
        plt.title(title)
