"""
Nested timing of the library calls made by a command.

A Timer collects, for every named subroutine, the number of calls, the
total time and possibly the child Timer passed to the subroutine through
its `timer` keyword.
"""
import time
import inspect
import json

from hlyaconstructor.Settings import ParallelPrint as print


def load_json(filename):
    """
    Load a timer saved with Timer.save_json
    """
    with open(filename, "r") as f:
        return Timer.from_dict(json.load(f))


class Timer:
    def __init__(self, active=False, print_each=None, level=0):
        """
        Parameters
        ----------
            active : bool
                If True the subroutines are timed, otherwise calls are only forwarded.
            print_each: float
                Print the report each time a subroutine overruns this many seconds.
                By default None.
            level: int
                0 for the principal timer, 1 for its children, etc.
        """
        self.active = active
        self.level = level
        self.timed_subroutines = {}
        self.print_each = print_each
        self.start_time = None

    def start(self):
        """Start the wall clock read by elapsed()."""
        self.start_time = time.time()

    def elapsed(self):
        """Seconds since start(), 0 if never started."""
        if self.start_time is None:
            return 0.0
        return time.time() - self.start_time

    def add_timer(self, name, value, timer=None):
        entry = self.timed_subroutines.setdefault(name, {"counts": 0, "time": 0.0, "timer": timer})
        entry["counts"] += 1
        entry["time"] += value
        if entry["timer"] is None:
            entry["timer"] = timer

        if self.print_each is not None and entry["time"] > self.print_each:
            self.print_report()
            for key in self.timed_subroutines:
                self.timed_subroutines[key]["time"] = 0
                self.timed_subroutines[key]["counts"] = 0

    def spawn_child(self):
        return Timer(active=self.active, print_each=self.print_each, level=self.level + 1)

    def _child_for(self, name):
        if name in self.timed_subroutines and self.timed_subroutines[name]["timer"] is not None:
            return self.timed_subroutines[name]["timer"]
        return self.spawn_child()

    def execute_timed_function(self, function, *args, **kwargs):
        """
        Call function(*args, **kwargs) and record the time under its name,
        or under the override_name keyword.

        A function accepting a `timer` keyword receives the child timer of
        its name, so the nested calls are recorded below it.
        Returns whatever the function returns.
        """
        name = kwargs.pop("override_name", "")
        if not self.active:
            return function(*args, **kwargs)

        child = None
        if inspect.isfunction(function) or inspect.ismethod(function):
            name = name or function.__name__
            if "timer" in inspect.signature(function).parameters and "timer" not in kwargs:
                child = self._child_for(name)
                kwargs["timer"] = child
        else:
            assert callable(function), "The function argument must be callable, got: {}".format(type(function))
            name = name or type(function).__name__

        t1 = time.time()
        ret = function(*args, **kwargs)
        self.add_timer(name, time.time() - t1, child)
        return ret

    def to_dict(self):
        subroutines = {}
        for name, entry in self.timed_subroutines.items():
            child = entry["timer"]
            subroutines[name] = {"counts": entry["counts"], "time": entry["time"],
                                 "timer": None if child is None else child.to_dict()}
        return {"active": self.active, "level": self.level, "print_each": self.print_each,
                "timed_subroutines": subroutines}

    @staticmethod
    def from_dict(data):
        timer = Timer(active=data.get("active", False), print_each=data.get("print_each"),
                      level=data.get("level", 0))
        for name, entry in data.get("timed_subroutines", {}).items():
            child = entry.get("timer")
            timer.timed_subroutines[name] = {"counts": entry["counts"], "time": entry["time"],
                                             "timer": None if child is None else Timer.from_dict(child)}
        return timer

    def save_json(self, filename):
        with open(filename, "w") as f:
            json.dump(self.to_dict(), f, indent=4)

    def print_report(self, master_level=0, is_master=False, verbosity_limit=0.05, **kwargs):
        """
        Print the time spent in each timed subroutine, recursively.

        Parameters
        ----------
            master_level: int
                The level of the master timer, for the indentation.
            is_master: bool
                Assume this timer is the master.
            verbosity_limit: float
                Fraction of the total time below which a subroutine is not printed.
            **kwargs :
                Passed to print (for example file=sys.stderr).
        """
        if is_master:
            master_level = self.level
        level = self.level - master_level
        prefix = " " * 4 * level

        if level == 0:
            print("=" * 24, **kwargs)
            print("      TIMER REPORT", **kwargs)
            print("=" * 24, **kwargs)

        total_time = sum(entry["time"] for entry in self.timed_subroutines.values())
        for name in sorted(self.timed_subroutines):
            entry = self.timed_subroutines[name]
            if total_time > 0 and entry["time"] / total_time < verbosity_limit:
                continue
            print("{}{}: {} calls, {:.4f} s".format(prefix, name, entry["counts"], entry["time"]), **kwargs)
            if entry["timer"] is not None and entry["timer"].timed_subroutines:
                entry["timer"].print_report(master_level=master_level, verbosity_limit=verbosity_limit, **kwargs)

        if level == 0:
            print("=" * 24, **kwargs)
