#include "vidreq/core/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>

#include "vidreq/core/error.hpp"

extern char** environ;

namespace vidreq {

namespace {

struct Pipe {
    int fds[2] = {-1, -1};
    Pipe() {
        if (::pipe2(fds, O_CLOEXEC) != 0) throw Error(ErrorKind::Io, std::string("pipe: ") + std::strerror(errno));
    }
    ~Pipe() {
        close_read();
        close_write();
    }
    Pipe(const Pipe&) = delete;
    Pipe& operator=(const Pipe&) = delete;
    void close_read() {
        if (fds[0] >= 0) ::close(fds[0]);
        fds[0] = -1;
    }
    void close_write() {
        if (fds[1] >= 0) ::close(fds[1]);
        fds[1] = -1;
    }
};

std::vector<std::string> build_environment(const EnvOverrides& overrides) {
    std::vector<std::string> env;
    for (char** e = environ; *e != nullptr; ++e) {
        std::string entry(*e);
        auto eq = entry.find('=');
        std::string key = entry.substr(0, eq);
        bool overridden = false;
        for (const auto& [k, v] : overrides) overridden = overridden || k == key;
        if (!overridden) env.push_back(std::move(entry));
    }
    for (const auto& [k, v] : overrides) {
        // An empty value unsets the variable.
        if (!v.empty()) env.push_back(k + "=" + v);
    }
    return env;
}

}  // namespace

ProcessResult run_process(const std::vector<std::string>& argv, std::string_view input, const EnvOverrides& env) {
    if (argv.empty()) throw Error(ErrorKind::BackendUnavailable, "empty command");
    static std::once_flag sigpipe_once;
    std::call_once(sigpipe_once, [] { ::signal(SIGPIPE, SIG_IGN); });

    Pipe in, out, err;
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_adddup2(&actions, in.fds[0], STDIN_FILENO);
    posix_spawn_file_actions_adddup2(&actions, out.fds[1], STDOUT_FILENO);
    posix_spawn_file_actions_adddup2(&actions, err.fds[1], STDERR_FILENO);

    std::vector<char*> cargv;
    for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);
    std::vector<std::string> envs = build_environment(env);
    std::vector<char*> cenv;
    for (auto& e : envs) cenv.push_back(e.data());
    cenv.push_back(nullptr);

    pid_t pid = 0;
    int rc = posix_spawnp(&pid, cargv[0], &actions, nullptr, cargv.data(), cenv.data());
    posix_spawn_file_actions_destroy(&actions);
    if (rc != 0) {
        throw Error(ErrorKind::BackendUnavailable, "cannot start '" + argv[0] + "': " + std::strerror(rc));
    }
    in.close_read();
    out.close_write();
    err.close_write();

    ProcessResult result;
    std::size_t written = 0;
    if (input.empty()) in.close_write();
    char buf[65536];
    while (out.fds[0] >= 0 || err.fds[0] >= 0) {
        pollfd pfds[3];
        int n = 0;
        int idx_in = -1, idx_out = -1, idx_err = -1;
        if (in.fds[1] >= 0) {
            idx_in = n;
            pfds[n++] = {in.fds[1], POLLOUT, 0};
        }
        if (out.fds[0] >= 0) {
            idx_out = n;
            pfds[n++] = {out.fds[0], POLLIN, 0};
        }
        if (err.fds[0] >= 0) {
            idx_err = n;
            pfds[n++] = {err.fds[0], POLLIN, 0};
        }
        if (::poll(pfds, n, -1) < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (idx_in >= 0 && pfds[idx_in].revents != 0) {
            ssize_t w = ::write(in.fds[1], input.data() + written, input.size() - written);
            if (w > 0) written += static_cast<std::size_t>(w);
            if (w < 0 || written == input.size()) in.close_write();
        }
        auto drain = [&](int idx, Pipe& p, std::string& sink) {
            if (idx < 0 || pfds[idx].revents == 0) return;
            ssize_t r = ::read(p.fds[0], buf, sizeof buf);
            if (r > 0) {
                sink.append(buf, static_cast<std::size_t>(r));
            } else if (r == 0 || errno != EINTR) {
                p.close_read();
            }
        };
        drain(idx_out, out, result.out);
        drain(idx_err, err, result.err);
    }
    in.close_write();

    int status = 0;
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.exit_code = 128 + WTERMSIG(status);
    }
    return result;
}

}  // namespace vidreq
